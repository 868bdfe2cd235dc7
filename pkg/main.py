import sys

from app.core.application import main


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
