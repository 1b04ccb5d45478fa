"""registry for command classes, the cli builds its sub commands from it"""
from typing import Dict


COMMANDS_REGISTRY: Dict[str, type] = {}


def register(command_cls: type) -> None:
    """register a command class, for internal use"""

    from lspace_knots.cli.commands import CommandMetaclass

    if not isinstance(command_cls, CommandMetaclass):
        raise TypeError(
            f"class of type {str(command_cls)} can't be registered,"
            f" needs to be a subclass of Command"
        )

    key = command_cls.command_name  # type: ignore
    if key in COMMANDS_REGISTRY:
        return

    COMMANDS_REGISTRY[key] = command_cls


def unregister(command_cls: type) -> None:
    """remove a command class, for internal use"""

    del COMMANDS_REGISTRY[command_cls.command_name]  # type: ignore


def clear_registry() -> None:
    """clear all, for internal use"""

    COMMANDS_REGISTRY.clear()


def get_command(name: str) -> type:
    """look up a command class by its sub command name"""

    from lspace_knots.exceptions import UnknownCommand

    try:
        return COMMANDS_REGISTRY[name]
    except KeyError:
        raise UnknownCommand(name) from None
