"""Exception types shared across the package."""


class HopfGKError(Exception):
    pass


class FieldMismatchError(HopfGKError, ValueError):
    """Operands live in cyclotomic fields of different orders."""


class EmbeddingError(HopfGKError, ValueError):
    pass


class PreconditionError(HopfGKError, ValueError):
    """An identity verifier was called outside its stated domain."""


class ParameterError(HopfGKError, ValueError):
    """Family parameters violate a named constraint."""


class PresentationMismatchError(HopfGKError, ValueError):
    pass


class UnsupportedFamilyError(HopfGKError, ValueError):
    pass


class QuotientConventionError(HopfGKError, ValueError):
    """The reduction rules for D/(y) do not define an algebra of the expected dimension."""
