from typing import List, Sequence, TypeVar, Union

T = TypeVar("T")


def round_robin(items: Sequence[T], nb_cells: int) -> List[List[T]]:
    """Deal items into at most `nb_cells` cells, one at a time, so that cell sizes differ by at most one.

    >>> round_robin(["a", "b", "c", "d", "e"], 2)
    [['a', 'c', 'e'], ['b', 'd']]
    >>> round_robin(["a"], 4)
    [['a']]
    >>> round_robin([], 3)
    []
    """
    nb_cells = min(nb_cells, len(items))
    cells: List[List[T]] = [[] for _ in range(nb_cells)]
    for index, item in enumerate(items):
        cells[index % nb_cells].append(item)
    return cells


def assert_true(assertion: bool, error: Union[str, BaseException] = None) -> None:
    """Raise an Exception with the given error_message if the assertion passed is false.

    Args:
        assertion: The boolean result of an assertion
        error: An Exception or a message string (in which case an AssertError with this message will be raised)

    >>> assert_true(3==3, "3 <> 4")
    >>> assert_true(3==4, "3 <> 4")
    Traceback (most recent call last):
    ...
    AssertionError: 3 <> 4
    >>> assert_true(3==4, ValueError("3 <> 4"))
    Traceback (most recent call last):
    ...
    ValueError: 3 <> 4
    """
    if not assertion:
        if isinstance(error, BaseException):
            raise error
        elif isinstance(error, str):
            raise AssertionError(error)
        else:
            raise AssertionError()
