import sys

from nsbell.cli_main import run

if __name__ == "__main__":
    sys.exit(run())
