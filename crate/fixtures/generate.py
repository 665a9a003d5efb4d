#!/usr/bin/env python3
"""Regenerates the committed test fixtures.

    python3 fixtures/generate.py

Needs GNU diff and git on PATH. Output is deterministic for a given
diffutils/git version; the manifests are computed here, by code that shares
nothing with the Rust implementation.
"""

import ast
import codecs
import difflib
import json
import random
import re
import shutil
import subprocess
import tempfile
from dataclasses import dataclass
from pathlib import Path

ROOT = Path(__file__).resolve().parent
CORPUS = ROOT / "diff-corpus"
SESSIONS = ROOT / "sessions"


# ---------------------------------------------------------------------------
# Reference reading of unified diff output


HEADER = re.compile(r"^@@ -(\d+)(?:,(\d+))? \+(\d+)(?:,(\d+))? @@")


def header_path(rest):
    path = rest.split("\t")[0].rstrip()
    if len(path) >= 2 and path.startswith('"') and path.endswith('"'):
        path = codecs.escape_decode(path[1:-1].encode())[0].decode("utf-8")
    return path


def side(start, count):
    if count == 0:
        return start + 1, start + 1
    return start, start + count - 1


@dataclass
class RefHunk:
    old_path: str
    new_path: str
    old_start: int
    old_count: int
    new_start: int
    new_count: int
    kind: str
    body: list
    id: int = 0

    @property
    def key(self):
        return self.old_path if self.new_path == "/dev/null" else self.new_path

    @property
    def new_range(self):
        return side(self.new_start, self.new_count)

    @property
    def old_range(self):
        return side(self.old_start, self.old_count)


def read_hunks(text):
    lines = text.split("\n")
    if text.endswith("\n"):
        lines.pop()
    lines = [l[:-1] if l.endswith("\r") else l for l in lines]
    hunks = []
    paths = None
    i = 0
    while i < len(lines):
        line = lines[i]
        if line.startswith("diff "):
            paths = None
            i += 1
            continue
        if line.startswith("--- ") and i + 1 < len(lines) and lines[i + 1].startswith("+++ "):
            paths = (header_path(line[4:]), header_path(lines[i + 1][4:]))
            i += 2
            continue
        m = HEADER.match(line)
        if not m:
            i += 1
            continue
        old_start, new_start = int(m.group(1)), int(m.group(3))
        old_count = int(m.group(2)) if m.group(2) is not None else 1
        new_count = int(m.group(4)) if m.group(4) is not None else 1
        left_old, left_new = old_count, new_count
        body = []
        i += 1
        while left_old or left_new:
            b = lines[i]
            tag = b[:1] or " "
            if tag == " ":
                left_old -= 1
                left_new -= 1
            elif tag == "-":
                left_old -= 1
            elif tag == "+":
                left_new -= 1
            elif tag != "\\":
                raise ValueError(f"bad body line {b!r}")
            if tag != "\\":
                body.append((tag, b[1:]))
            i += 1
        tags = {t for t, _ in body}
        if "+" in tags and "-" not in tags:
            kind = "addition"
        elif "-" in tags and "+" not in tags:
            kind = "deletion"
        else:
            kind = "modification"
        hunks.append(
            RefHunk(paths[0], paths[1], old_start, old_count, new_start, new_count, kind, body)
        )

    order = {}
    for h in hunks:
        order.setdefault(h.key, len(order))
    hunks.sort(key=lambda h: (order[h.key], h.new_start))
    for n, h in enumerate(hunks, 1):
        h.id = n
    return hunks


def table(hunks):
    out = []
    for h in hunks:
        ns, ne = h.new_range
        os_, oe = h.old_range
        out.append(f"{h.id}\t{h.new_path}\t{ns}-{ne}\t{h.kind}\t{h.old_path}\t{os_}-{oe}\n")
    return "".join(out)


def apply(old_lines, hunks):
    """Rebuilds the new file from the old one; checks the diff is genuine."""
    out = []
    pos = 1
    for h in sorted(hunks, key=lambda h: h.old_start):
        upto = h.old_start if h.old_count == 0 else h.old_start - 1
        out.extend(old_lines[pos - 1 : upto])
        pos = upto + 1
        for tag, text in h.body:
            if tag in " -":
                assert old_lines[pos - 1] == text, (old_lines[pos - 1], text)
                pos += 1
            if tag in " +":
                out.append(text)
    out.extend(old_lines[pos - 1 :])
    return out


def file_lines(path):
    text = Path(path).read_bytes().decode("utf-8") if Path(path).exists() else ""
    return [l[:-1] if l.endswith("\r") else l for l in text.splitlines()]


# ---------------------------------------------------------------------------
# Diff-parser corpus


def run(cmd, cwd=None):
    res = subprocess.run(cmd, cwd=cwd, capture_output=True)
    if res.returncode not in (0, 1):
        raise RuntimeError(f"{cmd}: {res.stderr.decode()}")
    return res.stdout.decode("utf-8")


GIT = ["git", "-c", "core.quotepath=true", "-c", "diff.noprefix=false", "diff", "--no-index", "--no-color"]

WORDS = "alpha beta gamma delta epsilon zeta eta theta iota kappa lambda mu nu xi omicron pi rho sigma tau upsilon phi chi psi omega".split()


def text_file(rng, n):
    return [f"{rng.choice(WORDS)} {rng.choice(WORDS)} {i}" for i in range(n)]


def mutate(rng, lines, edits):
    out = list(lines)
    for _ in range(edits):
        op = rng.choice(["mod", "ins", "del"])
        at = rng.randrange(len(out) + (op == "ins"))
        if op == "mod" and out:
            out[at] = out[at] + " changed"
        elif op == "ins":
            for k in range(rng.randint(1, 3)):
                out.insert(at, f"inserted {rng.choice(WORDS)} {rng.random():.6f}")
        elif out:
            del out[at : at + rng.randint(1, 3)]
    return out


def write_lines(path, lines, eol="\n", final_newline=True):
    path.parent.mkdir(parents=True, exist_ok=True)
    text = eol.join(lines)
    if lines and final_newline:
        text += eol
    path.write_bytes(text.encode("utf-8"))


def corpus_case(name, build):
    """`build(dir)` writes the inputs and returns (diff text, pairs), where
    pairs maps a hunk file key to (old file, new file) on disk."""
    case = CORPUS / name
    case.mkdir(parents=True)
    diff_text, pairs = build(case)
    (case / "change.diff").write_bytes(diff_text.encode("utf-8"))
    hunks = read_hunks(diff_text)
    by_file = {}
    for h in hunks:
        by_file.setdefault(h.key, []).append(h)
    for key, hs in by_file.items():
        old, new = pairs[key]
        rebuilt = apply(file_lines(old), hs)
        if hs[0].new_path != "/dev/null":
            assert rebuilt == file_lines(new), f"{name}: {key} does not round-trip"
    (case / "expected.tsv").write_text(table(hunks))
    return len(hunks)


def single_pair(rng, n, edits, tool, eol="\n", old_final=True, new_final=True):
    def build(case):
        old = text_file(rng, n)
        new = mutate(rng, old, edits)
        write_lines(case / "old.txt", old, eol, old_final)
        write_lines(case / "new.txt", new, eol, new_final)
        if tool[0] == "git":
            text = run(GIT + tool[1:] + ["old.txt", "new.txt"], cwd=case)
            return text, {"b/new.txt": (case / "old.txt", case / "new.txt")}
        text = run(tool + ["--label", "a/old.txt", "--label", "b/new.txt", "old.txt", "new.txt"], cwd=case)
        return text, {"b/new.txt": (case / "old.txt", case / "new.txt")}

    return build


def tree_pair(rng, files, tool):
    def build(case):
        pairs = {}
        names = [f"pkg/mod_{k}.py" for k in range(files)] + ["docs/read me.txt"]
        for k, name in enumerate(names):
            old = text_file(rng, rng.randint(20, 60))
            new = mutate(rng, old, rng.randint(0, 4)) if k != 1 else old
            write_lines(case / "old" / name, old)
            write_lines(case / "new" / name, new)
        write_lines(case / "old" / "gone.txt", text_file(rng, 5))
        write_lines(case / "new" / "added.txt", text_file(rng, 7))
        if tool == "git":
            text = run(GIT + ["old", "new"], cwd=case)
            prefix = ("a/old/", "b/new/")
        else:
            text = run(["diff", "-ruN", "old", "new"], cwd=case)
            prefix = ("old/", "new/")
        for h in read_hunks(text):
            rel = h.key.split("/", 2)[2] if tool == "git" else h.key.split("/", 1)[1]
            pairs[h.key] = (case / "old" / rel, case / "new" / rel)
        return text, pairs

    return build


def created_and_deleted(rng):
    def build(case):
        new = text_file(rng, 12)
        old = text_file(rng, 9)
        write_lines(case / "created.txt", new)
        write_lines(case / "deleted.txt", old)
        a = run(GIT + ["/dev/null", "created.txt"], cwd=case)
        b = run(GIT + ["deleted.txt", "/dev/null"], cwd=case)
        empty = case / ".empty"
        empty.write_text("")
        pairs = {"b/created.txt": (empty, case / "created.txt"), "a/deleted.txt": (case / "deleted.txt", empty)}
        return a + b, pairs

    return build


def unicode_name(rng):
    def build(case):
        old = text_file(rng, 30)
        new = mutate(rng, old, 3)
        write_lines(case / "old" / "café.py", old)
        write_lines(case / "new" / "café.py", new)
        text = run(GIT + ["old/café.py", "new/café.py"], cwd=case)
        key = read_hunks(text)[0].key
        return text, {key: (case / "old" / "café.py", case / "new" / "café.py")}

    return build


def difflib_pair(rng, n):
    def build(case):
        old = text_file(rng, n)
        new = mutate(rng, old, 5)
        write_lines(case / "old.txt", old)
        write_lines(case / "new.txt", new)
        text = "".join(
            difflib.unified_diff(
                [l + "\n" for l in old], [l + "\n" for l in new], "a/old.txt", "b/new.txt", n=2
            )
        )
        return text, {"b/new.txt": (case / "old.txt", case / "new.txt")}

    return build


def python_pair(rng):
    def build(case):
        project = Project(rng, files=1, funcs=8, prefix="app")
        project.edit(rng, count=5)
        f = project.files[0]
        write_lines(case / "old.py", f.render(old=True).lines)
        write_lines(case / "new.py", f.render().lines)
        text = run(["diff", "-u", "-p", "--label", "a/app.py", "--label", "b/app.py", "old.py", "new.py"], cwd=case)
        return text, {"b/app.py": (case / "old.py", case / "new.py")}

    return build


def build_corpus():
    shutil.rmtree(CORPUS, ignore_errors=True)
    rng = random.Random(20240611)
    cases = [
        ("01-unified-small", single_pair(rng, 40, 2, ["diff", "-u"])),
        ("02-unified-medium", single_pair(rng, 150, 6, ["diff", "-u"])),
        ("03-unified-large", single_pair(rng, 600, 25, ["diff", "-u"])),
        ("04-unified-dense", single_pair(rng, 80, 15, ["diff", "-u"])),
        ("05-unified-one-edit", single_pair(rng, 10, 1, ["diff", "-u"])),
        ("06-unified-wide-context", single_pair(rng, 200, 8, ["diff", "-U8"])),
        ("07-unified-one-context", single_pair(rng, 200, 8, ["diff", "-U1"])),
        ("08-zero-context", single_pair(rng, 120, 10, ["diff", "-U0"])),
        ("09-zero-context-dense", single_pair(rng, 60, 20, ["diff", "-U0"])),
        ("10-zero-context-large", single_pair(rng, 500, 30, ["diff", "-U0"])),
        ("11-git-small", single_pair(rng, 50, 3, ["git"])),
        ("12-git-medium", single_pair(rng, 250, 10, ["git"])),
        ("13-git-zero-context", single_pair(rng, 100, 8, ["git", "-U0"])),
        ("14-git-no-final-newline", single_pair(rng, 30, 2, ["git"], new_final=False)),
        ("15-unified-no-final-newline", single_pair(rng, 30, 2, ["diff", "-u"], old_final=False)),
        ("16-crlf", single_pair(rng, 60, 4, ["diff", "-u"], eol="\r\n")),
        ("17-tree-unified", tree_pair(rng, 5, "diff")),
        ("18-tree-git", tree_pair(rng, 5, "git")),
        ("19-created-deleted", created_and_deleted(rng)),
        ("20-unicode-path", unicode_name(rng)),
        ("21-difflib", difflib_pair(rng, 90)),
        ("22-python-function-context", python_pair(rng)),
        ("23-identical", single_pair(rng, 20, 0, ["diff", "-u"])),
        ("24-git-wide-context", single_pair(rng, 300, 12, ["git", "-U10"])),
    ]
    total = 0
    for name, build in cases:
        total += corpus_case(name, build)
    print(f"corpus: {len(cases)} cases, {total} hunks")


# ---------------------------------------------------------------------------
# Synthetic projects


NOUNS = """config charset header request response session token cache buffer stream
parser encoder record account payment invoice order report schedule queue worker
socket packet route handler template image thumbnail archive entry index query
filter column table schema field option plugin event timer logger metric counter
locale timezone currency address profile message channel""".split()
VERBS = """load save parse build render update compute validate fetch send open close
read write merge split apply reset encode decode resolve register lookup normalize
format check""".split()


@dataclass
class Function:
    name: str
    cls: str
    doc: str
    old: list  # statements, each a list of lines relative to body indent
    new: list
    edited: bool = False

    @property
    def qualname(self):
        return f"{self.cls}.{self.name}" if self.cls else self.name


@dataclass
class Rendered:
    lines: list
    # qualname -> (def line, last line, executed body lines)
    funcs: dict
    module_lines: list


@dataclass
class SourceFile:
    path: str
    imports: list
    items: list  # Function, or (class name, [Function])

    def functions(self):
        for item in self.items:
            if isinstance(item, Function):
                yield item
            else:
                yield from item[1]

    def render(self, old=False):
        lines = list(self.imports) + [""]
        module_lines = list(range(1, len(self.imports) + 1))
        funcs = {}

        def emit_function(fn, indent):
            pad = " " * indent
            lines.append(f"{pad}def {fn.name}(self, value, options=None):" if fn.cls else f"{pad}def {fn.name}(value, options=None):")
            def_line = len(lines)
            module_lines.append(def_line)
            lines.append(f'{pad}    """{fn.doc}"""')
            body = []
            for stmt in fn.old if old else fn.new:
                for text in stmt:
                    lines.append(f"{pad}    {text}")
                    body.append(len(lines))
            funcs[fn.qualname] = (def_line, len(lines), body)

        for item in self.items:
            lines.append("")
            if isinstance(item, Function):
                lines.append("")
                emit_function(item, 0)
            else:
                name, methods = item
                lines.append("")
                lines.append(f"class {name}:")
                module_lines.append(len(lines))
                for k, m in enumerate(methods):
                    if k:
                        lines.append("")
                    emit_function(m, 4)
        return Rendered(lines, funcs, module_lines)


class Project:
    def __init__(self, rng, files, funcs, prefix, classes=True):
        self.counter = 0
        self.files = []
        used = set()
        for f in range(files):
            items = []
            fns = []
            for _ in range(funcs):
                while True:
                    verb, noun = rng.choice(VERBS), rng.choice(NOUNS)
                    if (f, verb, noun) not in used:
                        used.add((f, verb, noun))
                        break
                fns.append(self.function(rng, verb, noun))
            if classes and len(fns) > 4:
                cls = rng.choice(NOUNS).capitalize() + "Manager"
                for m in fns[:3]:
                    m.cls = cls
                items.append((cls, fns[:3]))
                items.extend(fns[3:])
            else:
                items.extend(fns)
            imports = ["import os", "import re", f"from .{rng.choice(NOUNS)} import {rng.choice(NOUNS)}_defaults"]
            self.files.append(SourceFile(f"{prefix}/{rng.choice(NOUNS)}_{f}.py", imports, items))

    def fresh(self, noun):
        self.counter += 1
        return f"{noun}_{self.counter}"

    def statement(self, rng, noun):
        a, b = self.fresh(noun), self.fresh(rng.choice(NOUNS))
        verb = rng.choice(VERBS)
        pick = rng.randrange(5)
        if pick == 0:
            return [f"{a} = {verb}_{noun}(value, {b!r})"]
        if pick == 1:
            return [f"{a} = options.get({b!r}, {rng.randint(0, 99)})"]
        if pick == 2:
            return [f"if {a!r} in value:", f"    value = value.replace({a!r}, {b!r})"]
        if pick == 3:
            return [f"{a} = len(value) + {rng.randint(1, 9)}"]
        return [f"{a} = {noun}_defaults.{verb}({b!r})"]

    def function(self, rng, verb, noun):
        stmts = [self.statement(rng, noun) for _ in range(rng.randint(4, 8))]
        stmts.append([f"return {verb}_{noun}_result(value)"])
        doc = f"{verb.capitalize()} the {noun} {rng.choice(NOUNS)}."
        return Function(f"{verb}_{noun}", None, doc, stmts, [list(s) for s in stmts])

    def all_functions(self):
        for f in self.files:
            for fn in f.functions():
                yield f, fn

    def edit_function(self, rng, fn, op=None, single_line=False):
        noun = fn.name.split("_", 1)[1]
        # Never touch the final `return`; keep edits on one-line statements.
        simple = [k for k, s in enumerate(fn.new[:-1]) if len(s) == 1]
        op = op or rng.choice(["mod", "mod", "ins", "del"])
        if op == "del" and len(simple) < 2:
            op = "mod"
        k = rng.choice(simple) if simple else 0
        if op == "mod":
            old = fn.new[k][0]
            lhs = old.split(" = ", 1)[0] if " = " in old else self.fresh(noun)
            fn.new[k] = [f"{lhs} = {rng.choice(VERBS)}_{noun}(value, {self.fresh('limit')!r}) - 1"]
        elif op == "ins":
            extra = [self.statement(rng, noun) for _ in range(1 if single_line else rng.randint(1, 2))]
            if single_line:
                extra = [[f"{self.fresh(noun)} = len(value) - {rng.randint(1, 9)}"]]
            fn.new[k + 1 : k + 1] = extra
        else:
            del fn.new[k]
        fn.edited = True

    def edit(self, rng, count, single_line=False):
        fns = [fn for _, fn in self.all_functions()]
        for fn in rng.sample(fns, count):
            self.edit_function(rng, fn, single_line=single_line)


# ---------------------------------------------------------------------------
# Recorded sessions


class Recorder:
    """Simulates a traced run of the new version."""

    def __init__(self, project, hunks, prefix):
        self.events = []
        self.seq = 0
        self.rendered = {f.path: f.render() for f in project.files}
        self.lookup = {}
        for h in hunks:
            if h.new_path == "/dev/null":
                continue
            path = h.new_path[len(prefix) :]
            ns, ne = h.new_range
            for line in range(ns, ne + 1):
                self.lookup[(path, line)] = h.id

    def emit(self, **event):
        self.seq += 1
        self.events.append({"seq": self.seq, "th": "MainThread", **event})

    def execute(self, path, lines):
        current = None
        for line in lines:
            self.emit(t="b", f=path, l=line)
            hunk = self.lookup.get((path, line))
            if hunk is not None and hunk != current:
                self.emit(t="h", id=hunk)
            current = hunk

    def import_all(self):
        for path, r in self.rendered.items():
            self.execute(path, r.module_lines)

    def call(self, path, fn):
        _, _, body = self.rendered[path].funcs[fn.qualname]
        self.execute(path, body)

    def marker(self, label):
        self.emit(t="m", label=label)


def write_diff(project, out, context):
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        parts = []
        for f in sorted(project.files, key=lambda f: f.path):
            old, new = tmp / "old", tmp / "new"
            write_lines(old, f.render(old=True).lines)
            write_lines(new, f.render().lines)
            parts.append(
                run(["diff", f"-U{context}", "--label", f"a/{f.path}", "--label", f"b/{f.path}", str(old), str(new)])
            )
    text = "".join(parts)
    out.write_text(text)
    return read_hunks(text)


def method_map(project, src):
    """Extents from the interpreter's own parser, checked against the model."""
    out = {}
    for f in project.files:
        tree = ast.parse((src / f.path).read_text())
        extents = []

        def visit(node, owner):
            for child in ast.iter_child_nodes(node):
                if isinstance(child, ast.ClassDef):
                    visit(child, child.name)
                elif isinstance(child, (ast.FunctionDef, ast.AsyncFunctionDef)):
                    name = f"{owner}.{child.name}" if owner else child.name
                    extents.append({"name": name, "start": child.lineno, "end": child.end_lineno})
                    visit(child, name)

        visit(tree, None)
        model = f.render().funcs
        for e in extents:
            assert model[e["name"]][:2] == (e["start"], e["end"]), (f.path, e)
        out[f.path] = extents
    return out


def reference_rank(hunks, events, methods, bug, baseline, prefix, max_dist=10):
    """Brute-force ranking straight from the definitions."""
    marker = {e["label"]: e["seq"] for e in events if e["t"] == "m"}

    def covered(label):
        return {(e["f"], e["l"]) for e in events if e["t"] == "b" and e["seq"] < marker[label]}

    bug_cov = covered(bug)
    regions = []
    for h in hunks:
        if h.new_path == "/dev/null":
            continue
        path = h.new_path[len(prefix) :]
        ns, ne = h.new_range
        run_start = None
        for line in range(ns, ne + 2):
            hit = line <= ne and (path, line) in bug_cov
            if hit and run_start is None:
                run_start = line
            if not hit and run_start is not None:
                regions.append((h.id, path, run_start, line - 1))
                run_start = None

    owning = {r[0] for r in regions}
    hits = [e["id"] for e in events if e["t"] == "h" and e["seq"] < marker[bug]]
    position = {}
    for hid in reversed(hits):
        if hid in owning and hid not in position:
            position[hid] = len(position) + 1

    def method_of(path, line):
        inside = [e for e in methods.get(path, []) if e["start"] <= line <= e["end"]]
        if not inside:
            return None
        best = min(inside, key=lambda e: e["end"] - e["start"])
        return (best["start"], best["end"])

    def dist(line, s, e):
        return s - line if line < s else line - e if line > e else 0

    flags = {}
    if baseline is not None:
        delta = bug_cov - covered(baseline)
        for r in regions:
            hid, path, s, e = r
            near = [l for (f, l) in delta if f == path and dist(l, s, e) <= max_dist]
            if not near:
                flags[r] = False
            elif path not in methods:
                flags[r] = True
            else:
                own = {method_of(path, l) for l in range(s, e + 1)}
                flags[r] = any(method_of(path, l) in own for l in near)

    def key(r):
        hid, path, s, e = r
        return (
            0 if flags.get(r, False) else 1,
            position.get(hid, float("inf")),
            path,
            s,
            e,
            hid,
        )

    ranked = sorted(regions, key=key)
    return [
        {
            "rank": n,
            "hunk_id": r[0],
            "file": r[1],
            "start": r[2],
            "end": r[3],
            "diff_flag": flags.get(r, False),
            "eo_position": position.get(r[0]),
        }
        for n, r in enumerate(ranked, 1)
    ], bug_cov


def write_session(name, project, recorder, hunks, context, extra):
    out = SESSIONS / name
    src = out / "src"
    for f in project.files:
        write_lines(src / f.path, f.render().lines)
    methods = method_map(project, src)
    (out / "methods.json").write_text(json.dumps(methods, indent=1) + "\n")
    with open(out / "trace.jsonl", "w") as fh:
        for e in recorder.events:
            fh.write(json.dumps(e, separators=(",", ":")) + "\n")

    bug = "bug"
    baseline = extra.pop("baseline", None)
    events = recorder.events
    markers = {e["label"]: e["seq"] for e in events if e["t"] == "m"}
    hunk_hits = [e["id"] for e in events if e["t"] == "h" and e["seq"] < markers[bug]]
    eo, bug_cov = reference_rank(hunks, events, methods, bug, None, "b/")
    manifest = {
        "strip_prefix": "b/",
        "bug_marker": bug,
        "baseline_marker": baseline,
        "hunks": len(hunks),
        "events": len(events),
        "markers": markers,
        "executed_hunks": sorted({r["hunk_id"] for r in eo}),
        "latest_executed_hunk": hunk_hits[-1],
        "expected": {"eo": eo},
    }
    if baseline:
        manifest["expected"]["eo_diff"], _ = reference_rank(hunks, events, methods, bug, baseline, "b/")
    manifest.update(extra)
    if "planted" in manifest:
        p = manifest["planted"]
        lines = len(project_file(project, p["file"]).render().lines)
        lo, hi = max(1, p["start"] - 3), min(lines, p["end"] + 3)
        manifest["coverage"] = {
            "file": p["file"],
            "from": lo,
            "to": hi,
            "executed": [l for l in range(lo, hi + 1) if (p["file"], l) in bug_cov],
        }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")
    return manifest


def project_file(project, path):
    return next(f for f in project.files if f.path == path)


def planted_region(hunks, fn_file, planted_fn, recorder, eo):
    def_line, last, _ = recorder.rendered[fn_file].funcs[planted_fn.qualname]
    ids = {h.id for h in hunks if h.new_path == "b/" + fn_file and def_line <= h.new_range[0] <= last}
    regions = [r for r in eo if r["hunk_id"] in ids]
    assert len(regions) == 1, regions
    return regions[0]


def scenario(name, seed, files, funcs, common_n, bug_only_n, after_planted, post_dump=True):
    """A session with a baseline and a bug run. `after_planted` hunk-bearing
    common functions run between the planted function and the bug marker."""
    rng = random.Random(seed)
    project = Project(rng, files=files, funcs=funcs, prefix="shop")
    pool = [(f.path, fn) for f, fn in project.all_functions()]
    rng.shuffle(pool)
    planted_file, planted = pool[0]
    bug_only = pool[1 : 1 + bug_only_n]
    common = pool[1 + bug_only_n : 1 + bug_only_n + common_n]
    rest = pool[1 + bug_only_n + common_n :]

    project.edit_function(rng, planted, op="mod")
    for _, fn in bug_only:
        project.edit_function(rng, fn)
    edited_common = common[: max(after_planted + 2, common_n // 2)]
    for _, fn in edited_common:
        project.edit_function(rng, fn)
    for _, fn in rng.sample(rest, min(len(rest), 6)):
        project.edit_function(rng, fn)

    out = SESSIONS / name
    shutil.rmtree(out, ignore_errors=True)
    out.mkdir(parents=True)
    hunks = write_diff(project, out / "change.diff", 3)
    rec = Recorder(project, hunks, "b/")

    rec.import_all()
    for _ in range(2):
        for path, fn in rng.sample(common, len(common)):
            rec.call(path, fn)
    rec.marker("baseline")

    later = rng.sample(edited_common, after_planted)
    early = [c for c in common if c not in later]
    sequence = early + bug_only
    rng.shuffle(sequence)
    for path, fn in sequence:
        rec.call(path, fn)
    rec.call(planted_file, planted)
    for path, fn in later:
        rec.call(path, fn)
    rec.marker("bug")
    if post_dump:
        for path, fn in rng.sample(pool, 5):
            rec.call(path, fn)

    eo, _ = reference_rank(hunks, rec.events, {}, "bug", None, "b/")
    region = planted_region(hunks, planted_file, planted, rec, eo)
    noun = planted.name.split("_", 1)[1]
    query = f"{noun} total is off by one after {planted.name.replace('_', ' ')}"
    manifest = write_session(
        name,
        project,
        rec,
        hunks,
        3,
        {
            "baseline": "baseline",
            "planted": {k: region[k] for k in ("hunk_id", "file", "start", "end")},
            "query": query,
        },
    )
    return manifest


def rank_of(manifest, mode):
    p = manifest["planted"]
    return next(r for r in manifest["expected"][mode] if r["hunk_id"] == p["hunk_id"])


def build_planted():
    m = scenario("planted", seed=11, files=5, funcs=6, common_n=10, bug_only_n=3, after_planted=2)
    eo, eod = rank_of(m, "eo"), rank_of(m, "eo_diff")
    assert eod["rank"] <= 3, eod
    print(f"planted: {m['hunks']} hunks, EO rank {eo['rank']}, EO+D rank {eod['rank']}")


def build_flip():
    for seed in range(500, 600):
        m = scenario("flip", seed=seed, files=6, funcs=7, common_n=18, bug_only_n=3, after_planted=12)
        eo, eod = rank_of(m, "eo"), rank_of(m, "eo_diff")
        if eo["eo_position"] >= 10 and eod["rank"] == 1:
            print(f"flip: seed {seed}, {m['hunks']} hunks, EO rank {eo['rank']} (position {eo['eo_position']}), EO+D rank {eod['rank']}")
            return
    raise RuntimeError("no seed moved the planted region from deep EO to EO+D rank 1")


def build_wide():
    for seed in range(1000, 1100):
        rng = random.Random(seed)
        project = Project(rng, files=25, funcs=20, prefix="core", classes=False)
        for _, fn in project.all_functions():
            project.edit_function(rng, fn, single_line=True)
        out = SESSIONS / "wide"
        shutil.rmtree(out, ignore_errors=True)
        out.mkdir(parents=True)
        hunks = write_diff(project, out / "change.diff", 0)
        if len(hunks) != 500:
            continue
        rec = Recorder(project, hunks, "b/")
        rec.import_all()
        pool = [(f.path, fn) for f, fn in project.all_functions()]
        chosen = rng.sample(pool, 180)
        for path, fn in chosen + rng.sample(chosen, 60):
            rec.call(path, fn)
        rec.marker("bug")
        eo, bug_cov = reference_rank(hunks, rec.events, {}, "bug", None, "b/")
        touched = sorted(
            h.id
            for h in hunks
            if any((h.new_path[2:], l) in bug_cov for l in range(h.new_range[0], h.new_range[1] + 1))
        )
        if len(touched) != 180:
            continue
        m = write_session("wide", project, rec, hunks, 0, {"touched_hunks": touched})
        assert m["executed_hunks"] == touched
        print(f"wide: seed {seed}, {len(hunks)} hunks, {len(touched)} touched")
        return
    raise RuntimeError("no seed produced the wide shape")


def main():
    build_corpus()
    shutil.rmtree(SESSIONS, ignore_errors=True)
    build_planted()
    build_flip()
    build_wide()


if __name__ == "__main__":
    main()
