"""
Colored pass/fail rendering for check tables on a terminal.
"""

ascii_codes = {
    "pass": ("\u001b[32m", "\u001b[37m"),
    "fail": ("\u001b[31m", "\u001b[37m"),
    "unknown": ("\u001b[33m", "\u001b[37m")
}


def get_status(row):
    """
    Status of a check row.

    Parameters
    ----------
    row : dict
        A check row, with an optional boolean ``"pass"``

    Returns
    -------
    str
        ``"pass"``, ``"fail"`` or ``"unknown"``
    """
    value = row.get("pass")
    if value is True:
        return "pass"
    if value is False:
        return "fail"
    return "unknown"


def show_line(name, expected, actual, status, color=True):
    """
    Format one line of a check table.

    Parameters
    ----------
    name : str
        Check name
    expected : str
        What the check expects
    actual : str
        What was computed
    status : str
        One of the keys of `ascii_codes`
    color : bool
        Wrap the line in ANSI color codes

    Returns
    -------
    str
    """
    start_code, stop_code = ascii_codes[status] if color else ("", "")
    if len(expected) <= 28 and len(actual) <= 28:
        return "%s%-28s | %28s | %28s | %s%s" % (start_code, name, expected, actual, status, stop_code)
    return "%s%s\n    expected: %s\n    actual:   %s\n    %s%s" % (start_code, name, expected, actual,
                                                                   status, stop_code)
