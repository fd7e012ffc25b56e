import csv
import sys
from pathlib import Path
from specfac.graph import Graph
from specfac.util import Graph6Error, CapabilityError, to_json


GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047


def _size_chars(n):
    if n <= 62:
        return chr(63 + n)
    if n <= GRAPH6_MAX_N:
        return "~" + "".join(chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0))
    raise CapabilityError("graph6 output limited to n <= {}, got {}".format(GRAPH6_MAX_N, n))


def graph6_encode(G):
    """
    Encode a graph in graph6: size header, then the upper triangle of the adjacency matrix
    read column by column, packed 6 bits per printable character and zero-padded.
    """
    n = G.n
    out = [_size_chars(n)]
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def graph6_decode(text):
    """
    Decode a graph6 string (an optional ``>>graph6<<`` prefix and surrounding whitespace are
    ignored). Raises :py:class:`Graph6Error` on malformed input.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise Graph6Error("Empty graph6 string.")
    if text[0] in ":&":
        raise Graph6Error("sparse6 / digraph6 input is not supported.")
    vals = []
    for pos, c in enumerate(text):
        o = ord(c)
        if not 63 <= o <= 126:
            raise Graph6Error("Character {!r} at position {} outside 63..126".format(c, pos))
        vals.append(o - 63)

    # size header
    if vals[0] < 63:
        n, start = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        raise CapabilityError("graph6 input limited to n <= {}".format(GRAPH6_MAX_N))
    else:
        if len(vals) < 4:
            raise Graph6Error("Truncated graph6 size header.")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        start = 4
        if n <= 62:
            raise Graph6Error("Long size header used for n={} <= 62".format(n))

    n_bits = n * (n - 1) // 2
    n_chars = -(-n_bits // 6)
    data = vals[start:]
    if len(data) != n_chars:
        raise Graph6Error(
            "Expected {} data characters for n={}, got {}".format(n_chars, n, len(data))
        )
    pad = n_chars * 6 - n_bits
    if pad and data[-1] & ((1 << pad) - 1):
        raise Graph6Error("Non-zero padding bits.")

    adj = [[] for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                adj[i].append(j)
                adj[j].append(i)
            k += 1
    return Graph(n, adj)


def _open_lines(source):
    if source is None or source == "-":
        return sys.stdin, False
    if hasattr(source, "read"):
        return source, False
    return open(Path(source), "r", encoding="ascii"), True


def read_graph6_lines(source):
    """
    Stream the non-blank lines of a graph6 file, stripped.

    Parameters
    ----------
    source : str, :py:class:`~pathlib.Path`, file-like or "-"
        "-" or None reads standard input.
    """
    fh, close = _open_lines(source)
    try:
        for line in fh:
            line = line.strip()
            if line:
                yield line
    finally:
        if close:
            fh.close()


def read_graph6_file(source):
    """Stream graphs from a graph6 file, one per line. Blank lines are skipped."""
    for line in read_graph6_lines(source):
        yield graph6_decode(line)


def write_graph6_file(fp, graphs):
    count = 0
    with open(Path(fp), "w", encoding="ascii") as fh:
        for G in graphs:
            fh.write(graph6_encode(G) + "\n")
            count += 1
    return count


def write_jsonl(fp, records, append=True):
    """Append (or write) one JSON object per line."""
    with open(Path(fp), "a" if append else "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(to_json(rec) + "\n")


def write_csv(fp, rows, fieldnames):
    fp = Path(fp)
    new_file = not fp.exists()
    with open(fp, "a", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        if new_file:
            writer.writeheader()
        for row in rows:
            writer.writerow(row)
