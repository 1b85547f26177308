"""Plain-text formats: vector files and certificate documents.

A vector file holds one vector per line, entries separated by spaces,
each an integer or a rational ``p/q``; ``#`` starts a comment.

A certificate document is a sequence of ``field: value`` lines in the
fixed order of :data:`CERT_FIELDS`. Generators follow their field line,
one per indented line. Combinations are lists of ``index:value`` over
the generators in the order written. ``none`` marks an absent optional
field; the provenance is a JSON string literal so any text survives.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .certificate import DiscriminatingFunction, EnssCertificate
from .errors import CertificateError, InputError
from .lattice.vectors import CombinationCertificate, GeneratorSet, QVector
from .weights import QuasiWeight

CERT_FIELDS = (
    "dimension",
    "coordinates",
    "highest_weight",
    "generators",
    "witness",
    "cone_combination",
    "lattice_combination",
    "disc_fn",
    "provenance",
)


class ParseError(InputError):
    def __init__(self, line: int, fld: str, message: str):
        super().__init__(f"line {line}, field {fld}: {message}")
        self.line = line
        self.field = fld


def _rational(token: str) -> Fraction:
    if token.count("/") > 1:
        raise ValueError(f"bad rational {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {token!r}")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


# -- vector files -------------------------------------------------------------


def parse_vectors(text: str) -> list[QVector]:
    vectors: list[QVector] = []
    dim = None
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v = QVector(_rational(t) for t in line.split())
        except ValueError as exc:
            raise ParseError(lineno, "vector", str(exc)) from None
        if dim is None:
            dim = v.dim
        elif v.dim != dim:
            raise ParseError(lineno, "vector", f"expected {dim} entries, got {v.dim}")
        vectors.append(v)
    if not vectors:
        raise InputError("no vectors in input")
    return vectors


def read_vectors(path) -> list[QVector]:
    return parse_vectors(Path(path).read_text())


def format_vector(v) -> str:
    return " ".join(str(Fraction(c)) for c in v)


# -- certificates ---------------------------------------------------------------


def _combo_text(combo: CombinationCertificate, rational: bool) -> str:
    if not combo.coefficients:
        return "none"
    parts = []
    for i, c in combo.coefficients:
        parts.append(f"{i}:{c.numerator}/{c.denominator}" if rational else f"{i}:{c.numerator}")
    return " ".join(parts)


def emit_certificate(c: EnssCertificate) -> str:
    """The certificate as a document; :func:`load_certificate` inverts it."""
    out = [
        f"dimension: {c.n}",
        f"coordinates: {'quasi' if c.quasi else 'plain'}",
        "highest_weight: " + (format_vector(c.highest_weight.coords) if c.highest_weight is not None else "none"),
        "generators:",
    ]
    out += ["  " + format_vector(g) for g in c.generators]
    out += [
        "witness: " + format_vector(c.witness),
        "cone_combination: " + _combo_text(c.cone_combo, True),
        "lattice_combination: " + _combo_text(c.lattice_combo, False),
        "disc_fn: " + (format_vector(c.disc_fn.coeffs) if c.disc_fn is not None else "none"),
        "provenance: " + json.dumps(c.provenance, ensure_ascii=False),
    ]
    return "\n".join(out) + "\n"


def write_certificate(c: EnssCertificate, path) -> None:
    Path(path).write_text(emit_certificate(c))


class _Lines:
    def __init__(self, text: str):
        self.items = [(i, raw.rstrip()) for i, raw in enumerate(text.split("\n"), 1)
                      if raw.strip() and not raw.lstrip().startswith("#")]
        self.pos = 0

    def field(self, name: str) -> tuple[int, str]:
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise ParseError(last + 1, name, "missing field")
        lineno, raw = self.items[self.pos]
        key, sep, value = raw.partition(":")
        if not sep or key.strip() != name or raw[:1].isspace():
            raise ParseError(lineno, name, f"expected field {name!r}, found {raw.strip()!r}")
        self.pos += 1
        return lineno, value.strip()

    def indented(self) -> list[tuple[int, str]]:
        out = []
        while self.pos < len(self.items) and self.items[self.pos][1][:1].isspace():
            out.append(self.items[self.pos])
            self.pos += 1
        return out


def _vector(lineno: int, name: str, value: str, integral: bool = False) -> QVector:
    try:
        v = QVector(_rational(t) for t in value.split())
    except ValueError as exc:
        raise ParseError(lineno, name, str(exc)) from None
    if integral and not v.is_integral():
        raise ParseError(lineno, name, "entries must be integers")
    return v


def _combo(lineno: int, name: str, value: str, kind: str, m: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    if value == "none":
        return out
    for token in value.split():
        idx, sep, coeff = token.partition(":")
        try:
            i = int(idx)
            c = _rational(coeff)
        except ValueError:
            raise ParseError(lineno, name, f"bad entry {token!r}; expected index:value") from None
        if not sep:
            raise ParseError(lineno, name, f"bad entry {token!r}; expected index:value")
        if not 0 <= i < m:
            raise ParseError(lineno, name, f"index {i} out of range for {m} generators")
        if kind == "lattice" and "/" in coeff:
            raise ParseError(lineno, name, f"coefficient {coeff} must be an integer")
        if kind == "cone" and c < 0:
            raise ParseError(lineno, name, f"coefficient {coeff} is negative")
        if i in out:
            raise ParseError(lineno, name, f"index {i} repeated")
        out[i] = c
    return out


def load_certificate_text(text: str) -> EnssCertificate:
    lines = _Lines(text)
    ln, value = lines.field("dimension")
    try:
        n = int(value)
    except ValueError:
        raise ParseError(ln, "dimension", f"not an integer: {value!r}") from None
    if n < 1:
        raise ParseError(ln, "dimension", "must be positive")
    ln, value = lines.field("coordinates")
    if value not in ("quasi", "plain"):
        raise ParseError(ln, "coordinates", f"expected quasi or plain, got {value!r}")
    quasi = value == "quasi"

    ln, value = lines.field("highest_weight")
    lam = None
    if value != "none":
        v = _vector(ln, "highest_weight", value, integral=True)
        if v.dim != n:
            raise ParseError(ln, "highest_weight", f"expected {n} entries, got {v.dim}")
        lam = QuasiWeight(int(x) for x in v)
        if lam.coords != tuple(int(x) for x in v):
            raise ParseError(ln, "highest_weight", "not in canonical form (minimum coordinate 0)")

    ln, value = lines.field("generators")
    if value:
        raise ParseError(ln, "generators", "generators go on the following indented lines")
    gens = []
    for gl, raw in lines.indented():
        g = _vector(gl, "generators", raw, integral=quasi)
        if g.dim != n:
            raise ParseError(gl, "generators", f"expected {n} entries, got {g.dim}")
        if quasi and min(g) != 0:
            raise ParseError(gl, "generators", "not in canonical form (minimum coordinate 0)")
        gens.append(g)
    if not gens:
        raise ParseError(ln, "generators", "no generators")
    if len(set(gens)) != len(gens):
        raise ParseError(ln, "generators", "duplicate generator")

    ln, value = lines.field("witness")
    wit = _vector(ln, "witness", value, integral=quasi)
    if wit.dim != n:
        raise ParseError(ln, "witness", f"expected {n} entries, got {wit.dim}")
    if quasi and min(wit) != 0:
        raise ParseError(ln, "witness", "not in canonical form (minimum coordinate 0)")

    m = len(gens)
    ln, value = lines.field("cone_combination")
    cone = _combo(ln, "cone_combination", value, "cone", m)
    ln, value = lines.field("lattice_combination")
    lattice = _combo(ln, "lattice_combination", value, "lattice", m)

    ln, value = lines.field("disc_fn")
    f = None
    if value != "none":
        v = _vector(ln, "disc_fn", value)
        if v.dim != n:
            raise ParseError(ln, "disc_fn", f"expected {n} entries, got {v.dim}")
        try:
            f = DiscriminatingFunction(v)
        except InputError as exc:
            raise ParseError(ln, "disc_fn", str(exc)) from None

    ln, value = lines.field("provenance")
    try:
        provenance = json.loads(value)
    except json.JSONDecodeError as exc:
        raise ParseError(ln, "provenance", f"not a quoted string ({exc.msg})") from None
    if not isinstance(provenance, str):
        raise ParseError(ln, "provenance", "not a quoted string")
    if lines.pos < len(lines.items):
        extra_ln, raw = lines.items[lines.pos]
        raise ParseError(extra_ln, raw.partition(":")[0].strip(), "unexpected trailing content")

    gset = GeneratorSet(gens, dim=n)
    mapping = [gset.index(g) for g in gens]
    try:
        cone_c = CombinationCertificate("cone", tuple(cone.items())).remap(mapping)
        lat_c = CombinationCertificate("lattice", tuple(lattice.items())).remap(mapping)
    except CertificateError as exc:
        raise InputError(str(exc)) from None
    return EnssCertificate(
        n=n, generators=gset, witness=wit, cone_combo=cone_c, lattice_combo=lat_c,
        disc_fn=f, provenance=provenance, highest_weight=lam, quasi=quasi,
    )


def load_certificate(path) -> EnssCertificate:
    return load_certificate_text(Path(path).read_text())
