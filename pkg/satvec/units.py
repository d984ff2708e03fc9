MULTIPLES = [(3600.0, "h"), (60.0, "min"), (1.0, "s"), (0.001, "ms")]


def seconds_to_human_readable(seconds: float) -> str:
    """Transform a duration in seconds into a human-readable string.

    >>> seconds_to_human_readable(0.0123)
    '12.30 ms'
    >>> seconds_to_human_readable(4.5)
    '4.50 s'
    >>> seconds_to_human_readable(150)
    '2.50 min'
    >>> seconds_to_human_readable(0)
    '0.00 s'

    :param seconds:
    :return:
    """
    if seconds == 0:
        return "0.00 s"
    for unit_value, unit_name in MULTIPLES:
        if seconds >= unit_value:
            return f"{seconds / unit_value:0.2f} {unit_name}"
    return f"{seconds / MULTIPLES[-1][0]:0.2f} {MULTIPLES[-1][1]}"


def percent(part: int, total: int) -> float:
    """Percentage rounded to one decimal place, 0.0 when total is 0.

    >>> percent(1, 3)
    33.3
    >>> percent(0, 0)
    0.0
    """
    if total == 0:
        return 0.0
    return round(part * 100.0 / total, 1)
