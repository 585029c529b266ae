# tridom_cli.py
# Front end: `python tridom_cli.py <command> ...` (same as `python -m tridom`).
import sys

try:
    from tridom.cli.commands import main
except ModuleNotFoundError:
    sys.stderr.write(
        "Fatal Error: could not find the 'tridom' package.\n"
        "Run this script from the project root, which contains both tridom_cli.py and tridom/.\n"
    )
    sys.exit(2)

if __name__ == "__main__":
    main()
