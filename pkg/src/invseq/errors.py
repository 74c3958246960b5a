"""Exception types shared across the package."""


class InvSeqError(Exception):
    """Base class for every error raised by this package."""

    code = "error"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class OutOfRange(InvSeqError, ValueError):
    code = "out_of_range"

    def __init__(self, position: int, value: int, bound: int):
        self.position, self.value, self.bound = position, value, bound
        super().__init__(f"entry {value} at position {position} exceeds bound {bound}")

    def to_dict(self) -> dict:
        return {**super().to_dict(), "position": self.position, "value": self.value, "bound": self.bound}


class ResourceLimit(InvSeqError):
    code = "resource_limit"

    def __init__(self, n: int, limit: int):
        self.n, self.limit = n, limit
        super().__init__(f"n={n} exceeds the resource limit {limit} (set INVSEQ_MAX_N to raise it)")


class ParseError(InvSeqError, ValueError):
    code = "parse_error"

    def __init__(self, position: int, message: str, token: str = ""):
        self.position, self.token = position, token
        super().__init__(f"at position {position}: {message}" + (f" (token {token!r})" if token else ""))

    def to_dict(self) -> dict:
        return {**super().to_dict(), "position": self.position, "token": self.token}


class NotInClass(InvSeqError, ValueError):
    code = "not_in_class"

    def __init__(self, seq, domain: str, witness=None):
        self.seq, self.domain, self.witness = tuple(seq), domain, witness
        msg = f"{','.join(map(str, self.seq))} is not in {domain}"
        if witness is not None:
            msg += f"; offending positions {witness}"
        super().__init__(msg)

    def to_dict(self) -> dict:
        d = {**super().to_dict(), "input": list(self.seq), "domain": self.domain}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


class NotMovable(InvSeqError, ValueError):
    code = "not_movable"


class NoPreimage(InvSeqError, ValueError):
    code = "no_preimage"


class InternalInvariant(InvSeqError, AssertionError):
    code = "internal_invariant"


class NotSymmetric(InvSeqError, ValueError):
    code = "not_symmetric"

    def __init__(self, coeffs, d: int):
        self.coeffs, self.d = list(coeffs), d
        super().__init__(f"polynomial {self.coeffs} is not symmetric about degree {d}/2")


class NotInvariant(InvSeqError, ValueError):
    code = "not_invariant"

    def __init__(self, perm, a: int, image):
        self.perm, self.a, self.image = tuple(perm), a, tuple(image)
        super().__init__(f"MFS action at letter {a} sends {self.perm} to {self.image}, outside the set")


class MismatchAt(InvSeqError, AssertionError):
    code = "mismatch"

    def __init__(self, n: int, expected: int, got: int):
        self.n, self.expected, self.got = n, expected, got
        super().__init__(f"coefficient {n}: expected {expected}, got {got}")


class UnknownCheck(InvSeqError, KeyError):
    code = "unknown_check"

    def __str__(self) -> str:
        return Exception.__str__(self)
