"""Quantum patch generation: filling a SysEx template from measurement bytes.

A template names the 7-bit parameter fields of a 4-oscillator synth patch,
each with a byte offset into the SysEx payload, a default value, and a
`fixed` or `quantum` flag.  Patch generation keeps the first oscillator (and
anything else marked fixed) at its template value so the result stays
audible, and fills every quantum field from successive measurement bytes
masked to 7 bits.

Template file format, one declaration per line ('#' starts a comment):

    header = 7D 00 26
    size = 40
    field osc1.wave 3 0x02 fixed
    field osc2.wave 12 0x05 quantum
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .messages import MidiMessage, sysex

DEFAULT_TEMPLATE_RESOURCE = "default_patch.txt"


class PatchError(ValueError):
    """Template validation or patch generation failed."""


@dataclass(frozen=True)
class PatchField:
    name: str
    offset: int
    value: int
    quantum: bool

    @property
    def group(self) -> str:
        return self.name.split(".", 1)[0]


@dataclass(frozen=True)
class PatchTemplate:
    header: bytes
    size: int
    fields: tuple[PatchField, ...]

    def __post_init__(self):
        used = set(range(len(self.header)))
        for b in self.header:
            if b >= 0x80:
                raise PatchError(f"header byte 0x{b:02X} has its MSB set")
        for f in self.fields:
            if not 0 <= f.value <= 0x7F:
                raise PatchError(f"field {f.name}: value 0x{f.value:02X} is not 7-bit")
            if not len(self.header) <= f.offset < self.size:
                raise PatchError(
                    f"field {f.name}: offset {f.offset} outside payload "
                    f"({len(self.header)}..{self.size - 1})"
                )
            if f.offset in used:
                raise PatchError(f"field {f.name}: offset {f.offset} already assigned")
            used.add(f.offset)

    def quantum_fields(self) -> tuple[PatchField, ...]:
        return tuple(f for f in self.fields if f.quantum)

    def mutable_groups(self) -> tuple[str, ...]:
        seen: list[str] = []
        for f in self.quantum_fields():
            if f.group not in seen:
                seen.append(f.group)
        return tuple(seen)


def parse_template(text: str) -> PatchTemplate:
    header = b""
    size: int | None = None
    fields: list[PatchField] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.lower().startswith("header"):
                _, _, rest = line.partition("=")
                header = bytes(int(tok, 16) for tok in rest.split())
            elif line.lower().startswith("size"):
                _, _, rest = line.partition("=")
                size = int(rest.strip(), 0)
            elif line.startswith("field"):
                _, name, offset, value, flag = line.split()
                if flag not in ("fixed", "quantum"):
                    raise ValueError(f"flag must be fixed|quantum, got {flag!r}")
                fields.append(PatchField(name, int(offset, 0), int(value, 0),
                                         flag == "quantum"))
            else:
                raise ValueError(f"unrecognized declaration {line.split()[0]!r}")
        except (ValueError, IndexError) as exc:
            raise PatchError(f"template line {line_no}: {exc}") from None
    if size is None:
        raise PatchError("template is missing a size declaration")
    return PatchTemplate(header, size, tuple(fields))


def load_template(path=None) -> PatchTemplate:
    """Load a template file; with no path, the bundled generic template."""
    if path is None:
        text = (resources.files("qubitfx.midi") / "data" / DEFAULT_TEMPLATE_RESOURCE
                ).read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_template(text)


def generate_patch(template: PatchTemplate, qbytes) -> MidiMessage:
    """Build the patch SysEx: fixed fields verbatim, quantum fields from qbytes."""
    qbytes = list(qbytes)
    needed = len(template.quantum_fields())
    if len(qbytes) < needed:
        raise PatchError(f"need {needed} quantum bytes, got {len(qbytes)}")
    payload = bytearray(template.size)
    payload[: len(template.header)] = template.header
    for f in template.fields:
        payload[f.offset] = f.value
    for f, b in zip(template.quantum_fields(), qbytes):
        if not 0 <= b <= 255:
            raise PatchError(f"quantum byte {b} out of 0..255")
        payload[f.offset] = b & 0x7F
    return sysex(bytes(payload))
