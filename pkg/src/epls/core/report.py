"""
Verdicts and report records shared by predicates and the CLI.
"""
from typing import Any, NamedTuple, Optional


class Verdict(NamedTuple):
    """
    Outcome of a predicate.

    Unpacks like (holds, reason, witness); reason is a short stable code such
    as 'ok', 'regular' or 'imprimitive', witness the offending object if any.
    """
    holds: bool
    reason: str = 'ok'
    witness: Optional[Any] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {'holds': self.holds, 'reason': self.reason, 'witness': jsonable(self.witness)}


def jsonable(value: Any) -> Any:
    """Convert tuples, sets, numpy scalars and dataclass-like records for json.dumps."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, 'item'):
        return value.item()
    return str(value)


def verdict_record(predicate: str, instance: str, verdict: Verdict) -> dict:
    """JSON record for one predicate run on one named instance."""
    record = {'predicate': predicate, 'instance': instance}
    record.update(verdict.to_dict())
    return record
