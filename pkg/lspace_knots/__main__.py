from lspace_knots.cli import entrypoint

if __name__ == "__main__":
    entrypoint()
