"""Reader and writer for the line-oriented ``.hs`` structure format.

::

    # comments run to end of line
    [ring]
    m = 2
    n = 2
    elements = 0 1
    zero = 0
    one = 1
    h 1 1 = { 0 1 }
    k 1 1 = 1
    [module]
    elements = a b
    zero = a
    f b b = { a }
    g 1 b = { b }

Every table must be total; there are no defaults.  Element names are any run
of characters other than whitespace, ``{``, ``}``, ``=`` and ``#``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .bitset import from_indices, members
from .core import Carrier, HyperOperation, Hypermodule, KrasnerHyperring, Operation, _encode
from .errors import ParseError, TotalityError

TOKEN = re.compile(r"\{|\}|=|[^\s{}=#]+")
NAME = re.compile(r"[^\s{}=#]+")
HEADER = re.compile(r"\[\s*(\w+)\s*\]")
MISSING_CAP = 50
TABLE_BUDGET = 1_000_000

RING_KEYS = ("m", "n", "elements", "zero", "one")
MODULE_KEYS = ("elements", "zero")


@dataclass
class Diagnostic:
    line: int
    column: int
    category: str  # syntax | totality | undefined-name
    message: str

    def __str__(self):
        return f"{self.line}:{self.column}: {self.category}: {self.message}"

    def to_dict(self) -> dict:
        return {"line": self.line, "column": self.column, "category": self.category,
                "message": self.message}


@dataclass
class StructureFile:
    ring: KrasnerHyperring
    module: Optional[Hypermodule] = None
    diagnostics: list[Diagnostic] = field(default_factory=list)


class _Fail(Exception):
    def __init__(self, diag: Diagnostic):
        self.diag = diag


@dataclass
class _Section:
    kind: str
    line: int
    keys: dict = field(default_factory=dict)
    tables: dict = field(default_factory=dict)  # op -> {args: (value, line)}
    carrier: Optional[Carrier] = None


def _tokens(text: str) -> list[tuple[str, int]]:
    body = text.split("#", 1)[0]
    return [(mo.group(), mo.start() + 1) for mo in TOKEN.finditer(body)]


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.ring: Optional[_Section] = None
        self.module: Optional[_Section] = None
        self.current: Optional[_Section] = None

    def fail(self, line, col, msg, category="syntax"):
        raise _Fail(Diagnostic(line, col, category, msg))

    def run(self) -> StructureFile:
        for lno, raw in enumerate(self.lines, 1):
            stripped = raw.split("#", 1)[0].strip()
            if not stripped:
                continue
            if stripped.startswith("["):
                self.header(lno, raw, stripped)
                continue
            toks = _tokens(raw)
            if self.current is None:
                self.fail(lno, toks[0][1], "content before any [ring] or [module] header")
            head = toks[0][0]
            if head in ("h", "k", "f", "g"):
                self.table_line(lno, toks)
            else:
                self.key_line(lno, toks)
        return self.build()

    def header(self, lno, raw, stripped):
        col = raw.index("[") + 1
        mo = HEADER.fullmatch(stripped)
        if not mo or mo.group(1) not in ("ring", "module"):
            self.fail(lno, col, f"unknown section header {stripped!r}")
        kind = mo.group(1)
        if kind == "ring":
            if self.ring is not None:
                self.fail(lno, col, "duplicate [ring] section")
            self.ring = self.current = _Section("ring", lno)
        else:
            if self.ring is None:
                self.fail(lno, col, "[module] must follow a [ring] section")
            if self.module is not None:
                self.fail(lno, col, "duplicate [module] section")
            self.close_keys(self.ring, lno)
            self.module = self.current = _Section("module", lno)

    def key_line(self, lno, toks):
        sec = self.current
        key, col = toks[0]
        allowed = RING_KEYS if sec.kind == "ring" else MODULE_KEYS
        if key not in allowed:
            self.fail(lno, col, f"unknown key {key!r} in [{sec.kind}]")
        if len(toks) < 3 or toks[1][0] != "=":
            self.fail(lno, toks[1][1] if len(toks) > 1 else col + len(key), f"expected '{key} = ...'")
        if key in sec.keys:
            self.fail(lno, col, f"duplicate key {key!r}")
        if sec.tables:
            self.fail(lno, col, f"key {key!r} must come before table lines")
        vals = toks[2:]
        for v, c in vals:
            if v in ("{", "}", "="):
                self.fail(lno, c, f"unexpected {v!r}")
        if key in ("m", "n"):
            if len(vals) != 1 or not re.fullmatch(r"[0-9]{1,2}", vals[0][0]) or int(vals[0][0]) < 2:
                self.fail(lno, vals[0][1], f"{key} must be one integer between 2 and 99")
            sec.keys[key] = int(vals[0][0])
        elif key == "elements":
            names = [v for v, _ in vals]
            seen = set()
            for v, c in vals:
                if v in seen:
                    self.fail(lno, c, f"duplicate element {v!r}")
                seen.add(v)
            sec.keys[key] = names
        else:
            if len(vals) != 1:
                self.fail(lno, vals[1][1], f"{key} takes exactly one element")
            sec.keys[key] = vals[0]
        sec.keys.setdefault("_lines", {})[key] = lno

    def close_keys(self, sec: _Section, lno: int):
        """Freeze the scalar keys of a section once its first table line (or
        the next section) is reached."""
        if sec.carrier is not None:
            return
        need = RING_KEYS if sec.kind == "ring" else MODULE_KEYS
        for key in need:
            if key not in sec.keys:
                self.fail(lno, 1, f"[{sec.kind}] is missing '{key} = ...'")
        sec.carrier = Carrier(tuple(sec.keys["elements"]))
        for key in ("zero", "one"):
            if key in sec.keys:
                name, col = sec.keys[key]
                if name not in sec.carrier.labels:
                    self.fail(sec.keys["_lines"][key], col, f"undefined element {name!r}", "undefined-name")
        if sec.kind == "ring":
            for key in ("m", "n"):
                if sec.carrier.size ** sec.keys[key] > TABLE_BUDGET:
                    self.fail(sec.keys["_lines"][key], 1, f"table for {key} = {sec.keys[key]} is too large")
        else:
            r = self.ring
            if r.carrier.size ** (r.keys["n"] - 1) * sec.carrier.size > TABLE_BUDGET \
                    or sec.carrier.size ** r.keys["m"] > TABLE_BUDGET:
                self.fail(lno, 1, "module tables are too large")

    def table_line(self, lno, toks):
        sec = self.current
        op, col = toks[0]
        if sec.kind == "ring" and op not in ("h", "k"):
            self.fail(lno, col, f"table {op!r} belongs in [module]")
        if sec.kind == "module" and op not in ("f", "g"):
            self.fail(lno, col, f"table {op!r} belongs in [ring]")
        self.close_keys(sec, lno)
        ring = self.ring
        m, n = ring.keys["m"], ring.keys["n"]
        try:
            eq = next(i for i, (t, _) in enumerate(toks) if t == "=")
        except StopIteration:
            self.fail(lno, col + len(op), "expected '='")
        args = toks[1:eq]
        if op in ("h", "f"):
            carriers = [sec.carrier] * m
        elif op == "k":
            carriers = [sec.carrier] * n
        else:
            carriers = [ring.carrier] * (n - 1) + [sec.carrier]
        if len(args) != len(carriers):
            where = args[0][1] if args else toks[eq][1]
            self.fail(lno, where, f"{op} takes {len(carriers)} arguments, got {len(args)}")
        idx = []
        for (name, c), C in zip(args, carriers):
            if name in ("{", "}"):
                self.fail(lno, c, f"unexpected {name!r}")
            if name not in C.labels:
                self.fail(lno, c, f"undefined element {name!r}", "undefined-name")
            idx.append(C.index(name))
        rhs = toks[eq + 1:]
        target = sec.carrier
        if op == "k":
            if len(rhs) != 1 or rhs[0][0] in ("{", "}", "="):
                where = rhs[0][1] if rhs else toks[eq][1] + 1
                self.fail(lno, where, "k takes a single element value")
            name, c = rhs[0]
            if name not in target.labels:
                self.fail(lno, c, f"undefined element {name!r}", "undefined-name")
            value = target.index(name)
        else:
            if not rhs or rhs[0][0] != "{":
                self.fail(lno, rhs[0][1] if rhs else toks[eq][1] + 1, "expected '{'")
            if rhs[-1][0] != "}":
                self.fail(lno, rhs[-1][1], "expected '}' at end of line")
            inner = rhs[1:-1]
            if not inner:
                self.fail(lno, rhs[0][1], "empty set is not allowed")
            chosen = []
            for name, c in inner:
                if name in ("{", "}", "="):
                    self.fail(lno, c, f"unexpected {name!r}")
                if name not in target.labels:
                    self.fail(lno, c, f"undefined element {name!r}", "undefined-name")
                chosen.append(target.index(name))
            value = from_indices(chosen)
        entries = sec.tables.setdefault(op, {})
        key = tuple(idx)
        if key in entries:
            self.fail(lno, col, f"duplicate entry {op} {' '.join(a for a, _ in args)}"
                      f" (first given on line {entries[key][1]})")
        entries[key] = (value, lno)

    def complete(self, sec: _Section, op: str, carriers: list[Carrier], missing: list[Diagnostic]) -> list:
        entries = sec.tables.get(op, {})
        out = []
        for args in itertools.product(*(range(C.size) for C in carriers)):
            if args in entries:
                out.append(entries[args][0])
                continue
            out.append(None)
            if len(missing) < MISSING_CAP:
                names = " ".join(C.labels[a] for C, a in zip(carriers, args))
                missing.append(Diagnostic(len(self.lines) + 1, 1, "totality", f"missing entry: {op} {names}"))
        return out

    def build(self) -> StructureFile:
        if self.ring is None:
            self.fail(len(self.lines) + 1, 1, "no [ring] section")
        end = len(self.lines) + 1
        self.close_keys(self.ring, end)
        if self.module is not None:
            self.close_keys(self.module, end)
        r = self.ring
        m, n = r.keys["m"], r.keys["n"]
        missing: list[Diagnostic] = []
        counts = []
        htab = self.complete(r, "h", [r.carrier] * m, missing)
        ktab = self.complete(r, "k", [r.carrier] * n, missing)
        if self.module is not None:
            s = self.module
            ftab = self.complete(s, "f", [s.carrier] * m, missing)
            gtab = self.complete(s, "g", [r.carrier] * (n - 1) + [s.carrier], missing)
            counts = [ftab, gtab]
        total = sum(v is None for t in [htab, ktab] + counts for v in t)
        if total:
            raise TotalityError(f"{total} table entries missing; first: {missing[0].message}", missing)
        ring = KrasnerHyperring(r.carrier, HyperOperation(r.carrier, m, tuple(htab)),
                                Operation(r.carrier, n, tuple(ktab)),
                                r.carrier.index(r.keys["zero"][0]), r.carrier.index(r.keys["one"][0]))
        module = None
        if self.module is not None:
            s = self.module
            module = Hypermodule(ring, s.carrier, HyperOperation(s.carrier, m, tuple(ftab)),
                                 tuple(gtab), s.carrier.index(s.keys["zero"][0]))
        return StructureFile(ring, module)


def parse(text: str) -> StructureFile:
    """Parse a structure file; raises ParseError (first error, positioned) or
    TotalityError (every missing tuple, capped at 50)."""
    try:
        return _Parser(text).run()
    except _Fail as e:
        d = e.diag
        raise ParseError(str(d), [d]) from None


def parse_file(path) -> StructureFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _check_names(C: Carrier):
    for lab in C.labels:
        if not NAME.fullmatch(lab):
            raise ValueError(f"element name {lab!r} cannot be written in the text format")


def _set(C: Carrier, mask: int) -> str:
    return "{ " + " ".join(C.labels[i] for i in members(mask)) + " }"


def _emit_ring(R: KrasnerHyperring) -> list[str]:
    C = R.carrier
    _check_names(C)
    lab = C.labels
    out = ["[ring]", f"m = {R.m}", f"n = {R.n}", "elements = " + " ".join(lab),
           f"zero = {lab[R.zero]}", f"one = {lab[R.one]}"]
    for xs in itertools.product(range(C.size), repeat=R.m):
        out.append("h " + " ".join(lab[x] for x in xs) + " = " + _set(C, R.h(*xs)))
    for xs in itertools.product(range(C.size), repeat=R.n):
        out.append("k " + " ".join(lab[x] for x in xs) + " = " + lab[R.k(*xs)])
    return out


def _emit_module(M: Hypermodule) -> list[str]:
    C, R = M.carrier, M.ring
    _check_names(C)
    lab, rl = C.labels, R.carrier.labels
    out = ["[module]", "elements = " + " ".join(lab), f"zero = {lab[M.zero]}"]
    for xs in itertools.product(range(C.size), repeat=R.m):
        out.append("f " + " ".join(lab[x] for x in xs) + " = " + _set(C, M.f(*xs)))
    for rs in itertools.product(range(R.size), repeat=R.n - 1):
        base = _encode(R.size, rs) * C.size
        for x in range(C.size):
            out.append("g " + " ".join(rl[r] for r in rs) + " " + lab[x] + " = " + _set(C, M.g_table[base + x]))
    return out


def emit(obj: Union[KrasnerHyperring, Hypermodule, StructureFile]) -> str:
    """Canonical text: declared label order, tables in index order, sets ascending."""
    if isinstance(obj, StructureFile):
        ring, module = obj.ring, obj.module
    elif isinstance(obj, Hypermodule):
        ring, module = obj.ring, obj
    else:
        ring, module = obj, None
    lines = _emit_ring(ring)
    if module is not None:
        lines.append("")
        lines.extend(_emit_module(module))
    return "\n".join(lines) + "\n"
