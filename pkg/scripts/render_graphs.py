"""Write DOT files for a few small graphs, ready for ``dot -Tsvg``.

    python3 scripts/render_graphs.py --out figures 5 8 12 21 -7
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from genpaley import paley


@dataclass
class RenderConfig:
    out: Path = Path("figures")
    deltas: list[int] = field(default_factory=lambda: [5, 8, 12, 21])


def render(cfg: RenderConfig) -> list[Path]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    written = []
    for delta in cfg.deltas:
        path = cfg.out / f"P_{delta}.dot"
        path.write_text(paley.export(paley.build(delta), "dot"), encoding="utf-8")
        written.append(path)
    return written


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("deltas", nargs="*", type=int, default=RenderConfig().deltas)
    parser.add_argument("--out", type=Path, default=RenderConfig.out)
    args = parser.parse_args()
    for path in render(RenderConfig(args.out, args.deltas)):
        print(path)


if __name__ == "__main__":
    main()
