"""Exception hierarchy.  Every error the library raises derives from SemigroupError."""
from __future__ import annotations


class SemigroupError(ValueError):
    pass


class EntryOutOfRange(SemigroupError):
    def __init__(self, row: int, col: int, value: int, order: int):
        self.row, self.col, self.value, self.order = row, col, value, order
        super().__init__(
            f"table[{row}][{col}] = {value} is out of range [0, {order})")


class AssociativityFailure(SemigroupError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails at (i, j, k) = ({i}, {j}, {k})")


class NotVerified(SemigroupError):
    def __init__(self):
        super().__init__("operation requires a semigroup accepted by validate_table")


class OwnerMismatch(SemigroupError):
    def __init__(self):
        super().__init__("elements belong to different semigroups")


class DegreeMismatch(SemigroupError):
    pass


class SizeBudgetExceeded(SemigroupError):
    def __init__(self, size: int, cap: int):
        self.size, self.cap = size, cap
        super().__init__(f"order {size} exceeds the size budget {cap}")


class ClosureBudgetExceeded(SizeBudgetExceeded):
    pass


class NotIdempotent(SemigroupError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"element {index} is not idempotent")


class NotAGroup(SemigroupError):
    def __init__(self, element: int, reason: str = "has no two-sided inverse"):
        self.element = element
        super().__init__(f"not a group: element {element} {reason}")


class ComponentOutOfRange(SemigroupError):
    pass


class NotCompletelySimple(SemigroupError):
    """Raised with a witness.

    ``proper_ideal_element`` is the lowest element whose principal ideal is
    proper (``ideal`` lists that ideal); when the semigroup is simple but has
    no primitive idempotent, ``proper_ideal_element`` is None and
    ``no_primitive_idempotent`` is True.
    """

    def __init__(self, proper_ideal_element: int | None = None,
                 ideal: tuple[int, ...] = (), no_primitive_idempotent: bool = False):
        self.proper_ideal_element = proper_ideal_element
        self.ideal = ideal
        self.no_primitive_idempotent = no_primitive_idempotent
        if proper_ideal_element is not None:
            msg = (f"not completely simple: principal ideal of element "
                   f"{proper_ideal_element} is proper: {list(ideal)}")
        else:
            msg = "not completely simple: no primitive idempotent"
        super().__init__(msg)

    def witness(self) -> dict:
        if self.proper_ideal_element is not None:
            return {"proper_ideal_element": self.proper_ideal_element,
                    "ideal": list(self.ideal)}
        return {"no_primitive_idempotent": True}


class InverseNotFound(SemigroupError):
    pass


class ExponentOverflow(SemigroupError, OverflowError):
    pass


class ParamOutOfRange(SemigroupError):
    pass
