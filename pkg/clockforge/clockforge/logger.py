
from typing import Any
from datetime import datetime
import sys

STAT_PADDING = 35

_verbose = True

class ConsoleColor:
    BOLD = "\033[1m"
    RED = "\033[91m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    CYAN = "\033[96m"
    GREY = "\033[90m"
    CLEAR = "\033[0m"

def set_verbose(verbose: bool):
    """ Enable or disable info and stat messages. Warnings and errors are
        always shown """
    global _verbose
    _verbose = verbose

def is_verbose() -> bool:
    return _verbose

def _timestamp() -> str:
    return datetime.now().strftime("%H:%M:%S.%f")

def log_info(content: Any = ""):
    """ Show an info message """
    if not _verbose:
        return
    print(f"{ConsoleColor.GREY}[{_timestamp()}] {content}{ConsoleColor.CLEAR}",
    file=sys.stderr)

def log_warning(content: Any = ""):
    """ Show a warning message """
    print(f"{ConsoleColor.YELLOW}[{_timestamp()}] WARNING: {content}"
    f"{ConsoleColor.CLEAR}", file=sys.stderr)

def log_error(content: Any = ""):
    """ Show an error message """
    print(f"{ConsoleColor.RED}[{_timestamp()}] ERROR: {content}"
    f"{ConsoleColor.CLEAR}", file=sys.stderr)

def log_stat(name: str = "", content: Any = "N/A"):
    """ Show a statistic with the given name """
    if name == "" or not _verbose:
        return
    print(ConsoleColor.CYAN + (name + ":").ljust(STAT_PADDING) + " " +
    ConsoleColor.CLEAR + str(content), file=sys.stderr)
