"""Reading and writing conic certificates.

A certificate is a plain-text artifact listing conics in canonical form,
one record per line, preceded by a small metadata block.  The format is
line oriented and whitespace separated; coefficient fields are the comma
joined rational 8-tuples produced by KElem.to_text, so they contain no
spaces and the whole file splits safely on whitespace.

Layout:

    conic-census certificate 1
    kind orbit-census
    <key> <value...>          repeated metadata lines, order preserved
    count 800
    conic C1-000 <14 coefficient fields>
    ...

Round trips are bit exact: read(write(cert)) == cert, including metadata
order.  Reading re-validates that every record is in canonical form and
raises ParseError with line and field diagnostics otherwise.
"""

from dataclasses import dataclass
from importlib import resources

from .errors import CensusError, ParseError
from .field import KElem
from .geometry import Conic, RECORD_FIELDS

HEADER = "conic-census certificate 1"

# line keywords that terminate or structure the metadata block
_RESERVED = ("conic", "count", "kind")


@dataclass(frozen=True)
class ConicCertificate:
    """An ordered list of labelled conics plus free-form metadata."""

    kind: str
    meta: tuple  # ((key, value), ...) with key not in _RESERVED
    entries: tuple  # ((label, Conic), ...)

    @property
    def conics(self):
        return [c for _, c in self.entries]

    @property
    def labels(self):
        return [lab for lab, _ in self.entries]

    def keys(self):
        return {c.key for _, c in self.entries}

    def label_counts(self):
        """Count entries by label prefix (text before the first dash)."""
        counts = {}
        for lab, _ in self.entries:
            prefix = lab.split("-", 1)[0]
            counts[prefix] = counts.get(prefix, 0) + 1
        return counts

    def meta_values(self, key):
        return [v for k, v in self.meta if k == key]

    def conic_by_label(self, label):
        for lab, c in self.entries:
            if lab == label:
                return c
        raise KeyError(label)


def make_certificate(kind, entries, meta=()):
    seen = set()
    for lab, c in entries:
        if " " in lab or not lab:
            raise CensusError(f"bad conic label {lab!r}")
        if lab in seen:
            raise CensusError(f"duplicate conic label {lab!r}")
        seen.add(lab)
        if not isinstance(c, Conic):
            raise CensusError("certificate entries must hold Conic values")
    for k, _ in meta:
        if k in _RESERVED or " " in k:
            raise CensusError(f"bad metadata key {k!r}")
    return ConicCertificate(kind, tuple(meta), tuple(entries))


def certificate_text(cert: ConicCertificate) -> str:
    lines = [HEADER, f"kind {cert.kind}"]
    for k, v in cert.meta:
        lines.append(f"{k} {v}")
    lines.append(f"count {len(cert.entries)}")
    for lab, c in cert.entries:
        lines.append("conic " + lab + " " + " ".join(c.fields()))
    return "\n".join(lines) + "\n"


def write_certificate(cert: ConicCertificate, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(certificate_text(cert))


def _parse_conic_line(tokens, lineno):
    if len(tokens) != 2 + len(RECORD_FIELDS):
        raise ParseError(
            f"conic record needs a label and {len(RECORD_FIELDS)} fields, "
            f"got {len(tokens) - 1} tokens",
            line=lineno,
        )
    label = tokens[1]
    fields = tokens[2:]
    for name, text in zip(RECORD_FIELDS, fields):
        try:
            KElem.from_text(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), line=lineno, field=name) from None
    try:
        conic = Conic.from_fields(fields)
    except CensusError as exc:
        raise ParseError(str(exc), line=lineno) from None
    # canonical form is part of the format: the stored fields must be
    # exactly what canonicalization reproduces
    rebuilt = conic.fields()
    if list(fields) != rebuilt:
        for name, got, want in zip(RECORD_FIELDS, fields, rebuilt):
            if got != want:
                raise ParseError(
                    "coefficients not in canonical form", line=lineno, field=name
                )
    return label, conic


def parse_certificate(text: str) -> ConicCertificate:
    kind = None
    meta = []
    declared = None
    entries = []
    seen_labels = set()
    lines = text.split("\n")
    if not lines or lines[0].strip() != HEADER:
        raise ParseError(f"expected header {HEADER!r}", line=1)
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        word = tokens[0]
        if word == "kind":
            if kind is not None:
                raise ParseError("duplicate kind line", line=lineno)
            if len(tokens) != 2:
                raise ParseError("kind takes one value", line=lineno)
            kind = tokens[1]
        elif word == "count":
            if declared is not None:
                raise ParseError("duplicate count line", line=lineno)
            try:
                declared = int(tokens[1])
            except (ValueError, IndexError):
                raise ParseError("count takes one integer", line=lineno) from None
        elif word == "conic":
            if declared is None:
                raise ParseError("conic record before count line", line=lineno)
            label, conic = _parse_conic_line(tokens, lineno)
            if label in seen_labels:
                raise ParseError(f"duplicate label {label}", line=lineno)
            seen_labels.add(label)
            entries.append((label, conic))
        else:
            if declared is not None:
                raise ParseError(
                    f"metadata line {word!r} after count line", line=lineno
                )
            meta.append((word, line[len(word) + 1 :]))
    if kind is None:
        raise ParseError("missing kind line")
    if declared is None:
        raise ParseError("missing count line")
    if declared != len(entries):
        raise ParseError(f"count says {declared}, found {len(entries)} conic records")
    return ConicCertificate(kind, tuple(meta), tuple(entries))


def read_certificate(path) -> ConicCertificate:
    with open(path, "r", encoding="ascii") as fh:
        return parse_certificate(fh.read())


def load_packaged(name) -> ConicCertificate:
    """Read one of the certificate files shipped inside the package."""
    text = resources.files(__package__).joinpath("data", name).read_text("ascii")
    return parse_certificate(text)


NS_BASIS_FILE = "ns_basis_20.cert"
KUMMER_FILE = "kummer_16.cert"
