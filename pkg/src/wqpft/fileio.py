"""Binary and CSV readers/writers for signals and time-frequency maps.

Binary layout (all little-endian):

    magic   4 bytes  "WQPF"
    version u32      1
    kind    u8       0 = signal (one axis), 1 = tf map (u axis then w axis)
    per axis: start f64, step f64, count u64
    payload: interleaved (re, im) f64 pairs, row-major for maps (u rows)

CSV signals are "x,re,im" rows; a header row is optional and '#' lines are
comments. The x column must be uniform to 1e-9 of the step.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .core import Signal, TfGrid, TfMap, UniformGrid

__all__ = [
    "write_signal",
    "read_signal",
    "write_tfmap",
    "read_tfmap",
    "write_signal_csv",
    "read_signal_csv",
    "write_tfmap_magnitude_csv",
    "read_any",
]

MAGIC = b"WQPF"
VERSION = 1
KIND_SIGNAL = 0
KIND_TFMAP = 1

_HEAD = struct.Struct("<4sIB")
_AXIS = struct.Struct("<ddQ")


def _pack_axis(grid: UniformGrid) -> bytes:
    return _AXIS.pack(grid.start, grid.step, grid.count)


def _unpack_axis(buf: bytes, offset: int) -> tuple[UniformGrid, int]:
    start, step, count = _AXIS.unpack_from(buf, offset)
    return UniformGrid(start, step, int(count)), offset + _AXIS.size


def _payload(values: np.ndarray) -> bytes:
    flat = np.ascontiguousarray(values, dtype=np.complex128).reshape(-1)
    pairs = np.empty(2 * flat.size, dtype="<f8")
    pairs[0::2] = flat.real
    pairs[1::2] = flat.imag
    return pairs.tobytes()


def _read_payload(buf: bytes, offset: int, count: int) -> np.ndarray:
    need = 16 * count
    if len(buf) - offset != need:
        raise ValueError(f"truncated payload: expected {need} bytes, found {len(buf) - offset}")
    pairs = np.frombuffer(buf, dtype="<f8", count=2 * count, offset=offset)
    return pairs[0::2] + 1j * pairs[1::2]


def write_signal(path, signal: Signal) -> None:
    blob = _HEAD.pack(MAGIC, VERSION, KIND_SIGNAL) + _pack_axis(signal.grid) + _payload(signal.samples)
    Path(path).write_bytes(blob)


def write_tfmap(path, tfmap: TfMap) -> None:
    blob = (_HEAD.pack(MAGIC, VERSION, KIND_TFMAP)
            + _pack_axis(tfmap.tf_grid.u_grid)
            + _pack_axis(tfmap.tf_grid.w_grid)
            + _payload(tfmap.values))
    Path(path).write_bytes(blob)


def _read_header(buf: bytes) -> tuple[int, int]:
    if len(buf) < _HEAD.size:
        raise ValueError("truncated header")
    magic, version, kind = _HEAD.unpack_from(buf, 0)
    if magic != MAGIC:
        raise ValueError("bad magic: not a WQPF file")
    if version != VERSION:
        raise ValueError(f"unsupported version {version}")
    if kind not in (KIND_SIGNAL, KIND_TFMAP):
        raise ValueError(f"unknown kind byte {kind}")
    return kind, _HEAD.size


def read_signal(path) -> Signal:
    buf = Path(path).read_bytes()
    kind, offset = _read_header(buf)
    if kind != KIND_SIGNAL:
        raise ValueError("file holds a tf map, not a signal")
    grid, offset = _unpack_axis(buf, offset)
    return Signal(grid, _read_payload(buf, offset, grid.count))


def read_tfmap(path) -> TfMap:
    buf = Path(path).read_bytes()
    kind, offset = _read_header(buf)
    if kind != KIND_TFMAP:
        raise ValueError("file holds a signal, not a tf map")
    u_grid, offset = _unpack_axis(buf, offset)
    w_grid, offset = _unpack_axis(buf, offset)
    values = _read_payload(buf, offset, u_grid.count * w_grid.count)
    return TfMap(TfGrid(u_grid, w_grid), values.reshape(u_grid.count, w_grid.count))


def read_any(path):
    buf = Path(path).read_bytes()
    kind, _ = _read_header(buf)
    return read_signal(path) if kind == KIND_SIGNAL else read_tfmap(path)


def write_signal_csv(path, signal: Signal) -> None:
    x = signal.grid.points()
    lines = ["x,re,im"]
    for xv, sv in zip(x, signal.samples):
        lines.append(f"{xv!r},{sv.real!r},{sv.imag!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_signal_csv(path) -> Signal:
    rows = []
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ValueError(f"malformed CSV row: {raw!r}")
        try:
            rows.append((float(parts[0]), float(parts[1]), float(parts[2])))
        except ValueError:
            if rows:
                raise ValueError(f"malformed CSV row: {raw!r}") from None
            continue  # header row
    if len(rows) < 2:
        raise ValueError("CSV signal needs at least 2 rows")
    x = np.array([r[0] for r in rows])
    vals = np.array([r[1] for r in rows]) + 1j * np.array([r[2] for r in rows])
    step = (x[-1] - x[0]) / (len(x) - 1)
    if step <= 0:
        raise ValueError("non-uniform grid: x column must increase")
    expected = x[0] + step * np.arange(len(x))
    if np.max(np.abs(x - expected)) > 1e-9 * step:
        raise ValueError("non-uniform grid: x column deviates from uniform spacing")
    return Signal(UniformGrid(float(x[0]), float(step), len(x)), vals)


def write_tfmap_magnitude_csv(path, tfmap: TfMap) -> None:
    """Spectrogram-style export: |values| as a CSV grid, one u row per line."""
    u = tfmap.tf_grid.u_grid.points()
    w = tfmap.tf_grid.w_grid.points()
    lines = ["u\\w," + ",".join(repr(float(v)) for v in w)]
    mags = np.abs(tfmap.values)
    for i, uv in enumerate(u):
        lines.append(repr(float(uv)) + "," + ",".join(repr(float(v)) for v in mags[i]))
    Path(path).write_text("\n".join(lines) + "\n")
