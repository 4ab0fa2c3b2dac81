"""Named pass/fail/skip entries produced by the identity checks and verifiers."""

from __future__ import annotations

from dataclasses import dataclass

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self):
        return self.status == PASS

    def as_dict(self):
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


def _fmt_index(idx):
    return "(" + ",".join(str(i) for i in idx) + ")"


def compare(name, pairs, describe=None):
    """Check that every ``(index, lhs, rhs)`` triple has ``lhs == rhs``.

    The first mismatching index becomes the witness.
    """
    for idx, lhs, rhs in pairs:
        if lhs != rhs:
            where = describe(idx) if describe else _fmt_index(idx)
            return Check(name, FAIL, f"at {where}: lhs={lhs}, rhs={rhs}")
    return Check(name, PASS)


def equal(name, lhs, rhs):
    if lhs == rhs:
        return Check(name, PASS, f"{lhs} = {rhs}")
    return Check(name, FAIL, f"{lhs} != {rhs}")


def skip(name, reason):
    return Check(name, SKIP, reason)


def all_passed(checks):
    return all(c.status != FAIL for c in checks)
