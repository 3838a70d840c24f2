"""Shared error type with a machine-readable kind tag."""


class DomainError(ValueError):
    """Operation rejected its inputs or detected a broken invariant.

    ``kind`` is a stable kebab-case tag (e.g. ``invalid-modulus``,
    ``cap-exceeded``); ``detail`` is human-readable. The CLI prints
    these as ``error: <kind>: <detail>`` and exits 1.
    """

    def __init__(self, kind: str, detail: str):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail
