"""Terminal colors for PASS/FAIL tags, log levels and the help epilog.

Only used when ``--color`` or ``HOMYD_COLOR=1`` is given; plain reports
never contain escape codes.
"""

from colorama import Fore, Style, just_fix_windows_console

just_fix_windows_console()


class ForegroundColor:
    RESET = Style.RESET_ALL

    RED = Fore.LIGHTRED_EX
    BRED = Style.BRIGHT + Fore.RED
    GREEN = Fore.LIGHTGREEN_EX
    BGREEN = Style.BRIGHT + Fore.GREEN
    YELLOW = Fore.LIGHTYELLOW_EX
    BYELLOW = Style.BRIGHT + Fore.YELLOW
    BLUE = Fore.LIGHTBLUE_EX
    MAGENTA = Fore.LIGHTMAGENTA_EX
    WHITE = Fore.WHITE


fg = ForegroundColor()
rs = fg.RESET


class OutputFormater:
    """Verdict and status tags"""

    PASS = f"{fg.BGREEN}PASS{rs}"
    FAIL = f"{fg.BRED}FAIL{rs}"
    OK = f"{fg.GREEN}[ok]{rs}"
    ERR = f"{fg.RED}error:{rs}"
