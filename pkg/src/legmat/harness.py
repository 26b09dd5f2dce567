"""Batch verification: brute-force determinants against closed forms.

Each case is a (q, k, theorem) triple. The brute side only builds matrices and
runs elimination; the closed side only evaluates formulas mod p. The two share
field arithmetic and nothing else.

Match semantics per tag:

* ``*_VALUE`` and ``GALLERY_*``: brute and closed values are equal.
* ``*_SYMBOL*``: brute and closed Legendre symbols are equal; for
  ``DK_SYMBOL_ODDK`` the value of s_k goes in the note.
* ``TK_SINGULARITY``: ``closed_value`` is l_k; the match asks whether
  ``det T_k = 0`` exactly when ``l_k = 0``.
* ``CIRCULANT_BRIDGE``: ``brute_value`` is det D_k, ``closed_value`` is the
  determinant of the circulant C(b_0, ..., b_{k-1}), and b must be symmetric.
* ``GALLERY_SDP``: ``k`` holds d and ``brute_value`` is the exact integer
  S(d, p).
* ``CLASSNUM``: values are h(-p) by forms and by the character sum; symbols
  are ((p-1)/2)! mod p as +-1 against (-1)^((h+1)/2).
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from enum import Enum
from functools import lru_cache

from . import classnum, closed_forms, gallery
from .builders import build_circulant_b, build_Dk, build_Tk
from .errors import ConditionFailed, InvalidK, NotApplicable, QTooSmall
from .field import FieldSpec, divisors, is_prime, legendre, make_field, odd_prime_powers
from .matrix import build_circulant, determinant


class Theorem(str, Enum):
    DK_VALUE = "DK_VALUE"
    DK_SYMBOL_ODDK = "DK_SYMBOL_ODDK"
    DHALF_VALUE = "DHALF_VALUE"
    DHALF_SYMBOL = "DHALF_SYMBOL"
    TK_VALUE = "TK_VALUE"
    TK_SINGULARITY = "TK_SINGULARITY"
    THALF_VALUE = "THALF_VALUE"
    THALF_SYMBOL = "THALF_SYMBOL"
    CIRCULANT_BRIDGE = "CIRCULANT_BRIDGE"
    GALLERY_SUN = "GALLERY_SUN"
    GALLERY_INVSQ = "GALLERY_INVSQ"
    GALLERY_SDP = "GALLERY_SDP"
    GALLERY_WSN = "GALLERY_WSN"
    GALLERY_WUWANG = "GALLERY_WUWANG"
    CLASSNUM = "CLASSNUM"

    def __str__(self):
        return self.value


KNOWN_DISCREPANCY = "known corollary discrepancy"
CSV_COLUMNS = ("q", "p", "n", "k", "theorem", "brute_value", "closed_value",
               "brute_symbol", "closed_symbol", "match_value", "match_symbol", "note")


@dataclass
class VerificationRecord:
    q: int
    p: int
    n: int
    k: int
    theorem: str
    brute_value: int | None = None
    closed_value: int | None = None
    brute_symbol: int | None = None
    closed_symbol: int | None = None
    match_value: bool | None = None
    match_symbol: bool | None = None
    note: str = ""

    def __post_init__(self):
        self.theorem = str(self.theorem)
        if self.brute_value is not None and self.closed_value is not None:
            if self.match_value is None:
                self.match_value = self.brute_value == self.closed_value
        if self.brute_symbol is not None and self.closed_symbol is not None:
            if self.match_symbol is None:
                self.match_symbol = self.brute_symbol == self.closed_symbol

    @property
    def sort_key(self):
        return (self.q, self.k, self.theorem)

    @property
    def is_known_discrepancy(self) -> bool:
        return self.theorem == Theorem.THALF_VALUE.value and self.match_value is False

    def status(self, strict: bool = False) -> str:
        """One of 'pass', 'fail', 'known' (tolerated discrepancy) or 'skip'."""
        if self.match_value is None and self.match_symbol is None:
            return "skip"
        if self.match_value is False or self.match_symbol is False:
            if self.is_known_discrepancy and not strict:
                return "known"
            return "fail"
        return "pass"


# -- brute side --------------------------------------------------------------

@lru_cache(maxsize=4096)
def _brute(q: int, k: int, kind: str) -> int:
    """Code of a brute-force determinant, cached per process."""
    F = make_field(q)
    if kind == "D":
        M = build_Dk(F, k)
    elif kind == "T":
        M = build_Tk(F, k)
    else:
        M = build_circulant(build_circulant_b(F, k))
    return determinant(M).value


def _value_note(spec: FieldSpec, *codes: int) -> str:
    if any(c >= spec.p for c in codes if c is not None):
        return "determinant outside the prime field"
    return ""


def _sym(x: int, p: int) -> int:
    return legendre(x, p)


# -- per-theorem checks ----------------------------------------------------------

def _require_k(spec: FieldSpec, k: int, *, odd: bool = False, half: bool = False) -> None:
    q = spec.q
    if k <= 1 or (q - 1) % k:
        raise NotApplicable(f"k = {k} is not a divisor of q - 1 greater than 1")
    if odd and k % 2 == 0:
        raise NotApplicable("theorem needs odd k")
    if half and (k != (q - 1) // 2 or q <= 3):
        raise NotApplicable("theorem needs k = (q - 1)/2 and q > 3")


def _require_prime(spec: FieldSpec, k: int, k_free: bool = True) -> None:
    if spec.n != 1:
        raise NotApplicable("claim is stated for prime q only")
    if k_free and k != 0:
        raise NotApplicable("gallery case takes k = 0")


def _check_dk_value(spec, k, rec):
    _require_k(spec, k)
    brute = _brute(spec.q, k, "D")
    rec.brute_value = brute
    rec.closed_value = closed_forms.det_Dk_closed(spec, k).value
    rec.note = _value_note(spec, brute)
    if rec.note:
        rec.match_value = False


def _check_dk_symbol(spec, k, rec):
    _require_k(spec, k, odd=True)
    brute = _brute(spec.q, k, "D")
    sk = closed_forms.s_k(spec, k)
    rec.brute_value = brute
    rec.note = f"s_k={sk}"
    if brute == 0:
        rec.note = "D_k singular; symbol claim does not apply"
        return
    rec.brute_symbol = _sym(brute, spec.p)
    rec.closed_symbol = _sym(sk, spec.p)
    if sk == 0:
        rec.note += "; s_k vanishes although det D_k != 0"


def _check_dhalf_value(spec, k, rec):
    _require_k(spec, k, half=True)
    rec.brute_value = _brute(spec.q, k, "D")
    r = closed_forms.det_Dhalf_closed(spec)
    rec.closed_value = r.value
    rec.note = "; ".join(f"{name}={v}" for name, v in r.components.items())


def _check_dhalf_symbol(spec, k, rec):
    _require_k(spec, k, half=True)
    brute = _brute(spec.q, k, "D")
    rec.brute_value = brute
    rec.brute_symbol = _sym(brute, spec.p)
    if spec.n > 1:
        rec.note = "prime power: symbol not asserted"
        return
    p = spec.p
    h = classnum.h_by_reduced_forms(p) if p % 4 == 3 else None
    rec.closed_symbol = closed_forms.symbol_Dhalf(p, h)
    if h is not None:
        rec.note = f"h(-p)={h}"
    if brute == 0:
        rec.note = (rec.note + "; " if rec.note else "") + "D_(p-1)/2 singular"


def _check_tk_value(spec, k, rec):
    _require_k(spec, k)
    brute = _brute(spec.q, k, "T")
    rec.brute_value = brute
    rec.closed_value = closed_forms.det_Tk_closed(spec, k).value
    rec.note = _value_note(spec, brute)
    if rec.note:
        rec.match_value = False


def _check_tk_singularity(spec, k, rec):
    _require_k(spec, k)
    brute = _brute(spec.q, k, "T")
    singular, witness = closed_forms.tk_singularity_criterion(spec, k)
    rec.brute_value = brute
    rec.closed_value = closed_forms.l_k(spec, k)
    rec.match_value = (brute == 0) == singular
    rec.note = f"witness s={witness}" if singular else ""


def _check_thalf_value(spec, k, rec):
    _require_k(spec, k, half=True)
    rec.brute_value = _brute(spec.q, k, "T")
    rec.closed_value = closed_forms.det_Thalf_closed(spec).value
    if rec.brute_value != rec.closed_value:
        rec.note = KNOWN_DISCREPANCY


def _check_thalf_symbol(spec, k, rec):
    _require_k(spec, k, half=True)
    brute = _brute(spec.q, k, "T")
    rec.brute_value = brute
    if brute == 0:
        rec.note = "T_(q-1)/2 singular; symbol claim does not apply"
        return
    rec.brute_symbol = _sym(brute, spec.p)
    rec.closed_symbol = closed_forms.det_Thalf_closed(spec).symbol


def _check_circulant(spec, k, rec):
    _require_k(spec, k, odd=True)
    b = build_circulant_b(spec, k)
    rec.brute_value = _brute(spec.q, k, "D")
    rec.closed_value = _brute(spec.q, k, "C")
    symmetric = all(b[i] == b[k - i] for i in range(1, k))
    rec.match_value = symmetric and rec.brute_value == rec.closed_value
    if not symmetric:
        rec.note = "b_i != b_(k-i)"


def _check_sun(spec, k, rec):
    _require_prime(spec, k)
    if spec.p < 5:
        raise NotApplicable("needs p >= 5")
    rec.brute_value = gallery.sun_reciprocal_det(spec.p)
    rec.closed_value = gallery.sun_reciprocal_expected(spec.p)


def _check_invsq(spec, k, rec):
    _require_prime(spec, k)
    if spec.p % 4 != 3:
        raise NotApplicable("needs p = 3 (mod 4)")
    rec.brute_value = gallery.inverse_squares_det(spec.p)
    rec.closed_value = gallery.inverse_squares_expected(spec.p)


def _check_sdp(spec, k, rec):
    _require_prime(spec, k, k_free=False)
    p, d = spec.p, k
    if not 1 <= d <= p - 1:
        raise NotApplicable("k holds d and must lie in [1, p - 1]")
    if p > gallery.SDP_MAX_P:
        raise NotApplicable(f"p above the exact-integer bound {gallery.SDP_MAX_P}")
    det, sym_neg = gallery.S_dp(p, d)
    rec.brute_value = det
    rec.note = "k is d; brute_value is the exact integer S(d,p)"
    if legendre(d, p) == -1:
        rec.closed_value = 0
    else:
        rec.brute_symbol = sym_neg
        rec.closed_symbol = 1


def _check_wsn(spec, k, rec):
    if k != 0:
        raise NotApplicable("gallery case takes k = 0")
    if spec.q % 3 != 2:
        raise NotApplicable("needs q = 2 (mod 3)")
    rec.brute_value = gallery.wsn_det(spec)
    rec.closed_value = gallery.wsn_expected(spec)


def _check_wuwang(spec, k, rec):
    _require_prime(spec, k, k_free=False)
    p = spec.p
    if k <= 0 or k % 2 or (p - 1) % k:
        raise NotApplicable("needs an even divisor k of p - 1")
    try:
        rec.brute_value = gallery.wu_wang_det(p, k)
    except ConditionFailed:
        rec.note = "condition not applicable: -1 is a k-th power"
        return
    rec.closed_value = gallery.wu_wang_expected(p, k)


def _check_classnum(spec, k, rec):
    _require_prime(spec, k)
    p = spec.p
    if p % 4 != 3 or p <= 3:
        raise NotApplicable("needs p = 3 (mod 4), p > 3")
    h = classnum.h_by_reduced_forms(p)
    rec.brute_value = h
    rec.closed_value = classnum.h_by_character_sum(p)
    hf = classnum.half_factorial(p)
    rec.brute_symbol = 1 if hf == 1 else (-1 if hf == p - 1 else 0)
    rec.closed_symbol = -1 if ((h + 1) // 2) % 2 else 1


_CHECKS = {
    Theorem.DK_VALUE: _check_dk_value,
    Theorem.DK_SYMBOL_ODDK: _check_dk_symbol,
    Theorem.DHALF_VALUE: _check_dhalf_value,
    Theorem.DHALF_SYMBOL: _check_dhalf_symbol,
    Theorem.TK_VALUE: _check_tk_value,
    Theorem.TK_SINGULARITY: _check_tk_singularity,
    Theorem.THALF_VALUE: _check_thalf_value,
    Theorem.THALF_SYMBOL: _check_thalf_symbol,
    Theorem.CIRCULANT_BRIDGE: _check_circulant,
    Theorem.GALLERY_SUN: _check_sun,
    Theorem.GALLERY_INVSQ: _check_invsq,
    Theorem.GALLERY_SDP: _check_sdp,
    Theorem.GALLERY_WSN: _check_wsn,
    Theorem.GALLERY_WUWANG: _check_wuwang,
    Theorem.CLASSNUM: _check_classnum,
}


def verify_case(spec: FieldSpec, k: int, theorem) -> VerificationRecord:
    """Run one comparison. Inapplicable cases come back as skip records."""
    theorem = Theorem(theorem)
    rec = VerificationRecord(spec.q, spec.p, spec.n, k, theorem.value)
    try:
        _CHECKS[theorem](spec, k, rec)
    except (NotApplicable, InvalidK, QTooSmall) as exc:
        return VerificationRecord(spec.q, spec.p, spec.n, k, theorem.value,
                                  note=f"not applicable: {exc}")
    rec.__post_init__()
    return rec


# -- scanning --------------------------------------------------------------------

@dataclass
class ScanConfig:
    q_max: int
    theorems: tuple = tuple(Theorem)
    k: int | None = None
    jobs: int = 1
    out: str | None = None
    format: str = "csv"
    strict: bool = False

    def __post_init__(self):
        from .field import MAX_Q
        if not 3 <= self.q_max <= MAX_Q:
            raise ValueError(f"q_max must lie in [3, {MAX_Q}]")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        self.theorems = tuple(Theorem(t) for t in self.theorems)


def admissible_ks(q: int, theorem: Theorem) -> list[int]:
    """The k values a scan enumerates for one (q, theorem)."""
    big = [k for k in divisors(q - 1) if k > 1]
    prime = is_prime(q)
    if theorem in (Theorem.DK_VALUE, Theorem.TK_VALUE, Theorem.TK_SINGULARITY):
        return big
    if theorem in (Theorem.DK_SYMBOL_ODDK, Theorem.CIRCULANT_BRIDGE):
        return [k for k in big if k % 2]
    if theorem in (Theorem.DHALF_VALUE, Theorem.DHALF_SYMBOL,
                   Theorem.THALF_VALUE, Theorem.THALF_SYMBOL):
        return [(q - 1) // 2] if q > 3 else []
    if theorem == Theorem.GALLERY_SUN:
        return [0] if prime and q >= 5 else []
    if theorem == Theorem.GALLERY_INVSQ:
        return [0] if prime and q % 4 == 3 else []
    if theorem == Theorem.GALLERY_SDP:
        return list(range(1, q)) if prime and q <= gallery.SDP_MAX_P else []
    if theorem == Theorem.GALLERY_WSN:
        return [0] if q % 3 == 2 else []
    if theorem == Theorem.GALLERY_WUWANG:
        return [k for k in big if k % 2 == 0] if prime else []
    if theorem == Theorem.CLASSNUM:
        return [0] if prime and q % 4 == 3 and q > 3 else []
    raise ValueError(theorem)


def enumerate_cases(config: ScanConfig) -> list[tuple[int, int, str]]:
    cases = []
    for q in odd_prime_powers(config.q_max):
        for t in config.theorems:
            for k in admissible_ks(q, t):
                if config.k is None or k == config.k:
                    cases.append((q, k, t.value))
    cases.sort()
    return cases


def _run_case(case: tuple[int, int, str]) -> VerificationRecord:
    q, k, t = case
    return verify_case(make_field(q), k, t)


def summarize(records, strict: bool = False) -> dict:
    summary = {}
    for rec in records:
        counts = summary.setdefault(rec.theorem, {"pass": 0, "fail": 0, "known": 0, "skip": 0})
        counts[rec.status(strict)] += 1
    return dict(sorted(summary.items()))


@dataclass
class Report:
    records: list[VerificationRecord]
    strict: bool = False
    summary: dict = field(init=False)

    def __post_init__(self):
        self.summary = summarize(self.records, self.strict)

    @property
    def unexpected_failures(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.status(self.strict) == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.unexpected_failures else 0


def scan(config: ScanConfig) -> Report:
    cases = enumerate_cases(config)
    if config.jobs == 1 or len(cases) < 2:
        records = [_run_case(c) for c in cases]
    else:
        chunk = max(1, len(cases) // (config.jobs * 4))
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_run_case, cases, chunksize=chunk))
    records.sort(key=lambda r: r.sort_key)
    return Report(records, config.strict)


# -- serialization -----------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([_cell(getattr(r, c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_json(records, strict: bool = False) -> str:
    payload = {"records": [asdict(r) for r in records], "summary": summarize(records, strict)}
    return json.dumps(payload, indent=2) + "\n"


def records_from_json(text: str) -> list[VerificationRecord]:
    return [VerificationRecord(**obj) for obj in json.loads(text)["records"]]


def records_from_csv(text: str) -> list[VerificationRecord]:
    ints = {"q", "p", "n", "k", "brute_value", "closed_value", "brute_symbol", "closed_symbol"}
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        kw = {}
        for f in fields(VerificationRecord):
            raw = row[f.name]
            if f.name in ints:
                kw[f.name] = int(raw) if raw != "" else None
            elif f.name.startswith("match_"):
                kw[f.name] = None if raw == "" else raw == "true"
            else:
                kw[f.name] = raw
        out.append(VerificationRecord(**kw))
    return out


def emit_report(records, format: str = "csv", path=None, strict: bool = False) -> str:
    """Serialize sorted records; writes to ``path`` when given, returns the text."""
    records = sorted(records, key=lambda r: r.sort_key)
    text = to_csv(records) if format == "csv" else to_json(records, strict)
    if path is not None:
        tmp = f"{path}.tmp"
        with open(tmp, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    return text
