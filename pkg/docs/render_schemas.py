"""Regenerate cli-schema.md from the schema definitions in the package."""
from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from jtkit.cli import _build_parser
from jtkit.schemas import SCHEMAS

HEADER = """# CLI JSON payloads

Every subcommand prints a single JSON object on stdout when run with the
default `--format json`.  The draft-07 schemas below are the source of
truth for those payloads; they live in `jtkit.schemas.SCHEMAS` and the
test suite validates real CLI output against them.  Regenerate this file
with `python3 docs/render_schemas.py` after changing a payload.

Exit codes: 0 on success (including negative scan verdicts), 1 for
domain errors reported as `error: ...` on stderr, 2 for usage errors.

Partitions are encoded as arrays of weakly decreasing positive integers.
Class values (for sequences carrying symbolic terms) are arrays of
`{"partitions": [...], "coeff": n}` entries; integer values stay bare.
"""


def main() -> int:
    parser = _build_parser()
    sub = next(a for a in parser._actions if a.__class__.__name__ == "_SubParsersAction")
    helps = {a.dest: a.help for a in sub._choices_actions}
    lines = [HEADER]
    for name in sorted(SCHEMAS):
        lines.append(f"## `{name}`")
        lines.append("")
        blurb = helps.get(name)
        if blurb:
            lines.append(blurb[0].upper() + blurb[1:] + ".")
            lines.append("")
        lines.append("```json")
        lines.append(json.dumps(SCHEMAS[name], indent=2, sort_keys=True))
        lines.append("```")
        lines.append("")
    target = Path(__file__).resolve().parent / "cli-schema.md"
    target.write_text("\n".join(lines))
    print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
