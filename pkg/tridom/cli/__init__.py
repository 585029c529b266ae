# tridom/cli/__init__.py
from tridom.cli.commands import main, run
