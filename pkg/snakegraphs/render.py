"""ASCII and SVG drawings of snake graphs."""
from .graph import EmptySnakeGraph, FACES, EdgeRef

UNIT = 40
MARGIN = 10


def _extent(G):
    width = max(x for x, _ in G.positions) + 1
    height = max(y for _, y in G.positions) + 1
    return width, height


def render_ascii(G, legend=False):
    if isinstance(G, EmptySnakeGraph):
        return f"+-+  {G.label}" if legend else "+-+"

    width, height = _extent(G)
    grid = [[' '] * (2 * width + 1) for _ in range(2 * height + 1)]
    for x, y in G.positions:
        bottom, top = 2 * (height - y), 2 * (height - y - 1)
        left, right = 2 * x, 2 * x + 2
        for row in (bottom, top):
            grid[row][left] = grid[row][right] = '+'
            grid[row][left + 1] = '-'
        for col in (left, right):
            grid[bottom - 1][col] = '|'

    lines = [''.join(row).rstrip() for row in grid]
    if legend:
        lines.extend(f"tile {j}: {label}" for j, label in enumerate(G.tile_labels, start=1))
    return '\n'.join(lines)


def render_svg(G):
    if isinstance(G, EmptySnakeGraph):
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{UNIT + 2 * MARGIN}" height="{2 * MARGIN + 12}">'
            f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN + UNIT}" y2="{MARGIN}" stroke="black"/>'
            f'<text x="{MARGIN + UNIT // 2}" y="{MARGIN + 12}" font-size="8" text-anchor="middle">{G.label}</text>'
            '</svg>'
        )

    width, height = _extent(G)

    def corner(x, y):
        return MARGIN + x * UNIT, MARGIN + (height - y) * UNIT

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width * UNIT + 2 * MARGIN}" '
        f'height="{height * UNIT + 2 * MARGIN}">'
    ]
    for j, (x, y) in enumerate(G.positions, start=1):
        left, top = corner(x, y + 1)
        parts.append(
            f'<rect x="{left}" y="{top}" width="{UNIT}" height="{UNIT}" fill="none" stroke="black"/>'
        )
        parts.append(
            f'<text x="{left + UNIT // 2}" y="{top + UNIT // 2 + 4}" font-size="10" '
            f'text-anchor="middle">{G.tile_labels[j - 1]}</text>'
        )

    seen = set()
    for j in range(1, G.d + 1):
        for face in FACES:
            edge = G.canonical(EdgeRef(j, face))
            if edge in seen:
                continue
            seen.add(edge)
            (x1, y1), (x2, y2) = (corner(*v) for v in G.vertices_of(edge))
            parts.append(
                f'<text x="{(x1 + x2) / 2:g}" y="{(y1 + y2) / 2:g}" font-size="7" '
                f'fill="gray" text-anchor="middle">{G.labels[edge]}</text>'
            )
    parts.append('</svg>')
    return '\n'.join(parts)


def render(G, fmt='ascii', legend=False):
    if fmt == 'ascii':
        return render_ascii(G, legend=legend)
    if fmt == 'svg':
        return render_svg(G)
    raise ValueError(f"Unknown render format {fmt!r}")
