# tridom/__main__.py
from tridom.cli.commands import main

if __name__ == "__main__":
    main()
