import re

from lspace_knots.exceptions import ImproperlyConfigured


def validate_command_name(name: str, cls_name: str) -> None:
    if name == "":
        raise ImproperlyConfigured(
            f"Invalid command name for {cls_name}: cannot be empty"
        )

    if not re.fullmatch(r"[a-z][a-z0-9-]*", name):
        raise ImproperlyConfigured(
            f"Invalid command name for {cls_name}: {name!r}, "
            "use lowercase words and '-'"
        )


def to_kebab_case(s: str) -> str:
    tmp = re.sub("(.)([A-Z][a-z]+)", r"\1-\2", s)
    return re.sub("([a-z0-9])([A-Z])", r"\1-\2", tmp).lower().replace("_", "-")
