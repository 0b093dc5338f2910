"""Grayscale image steganography in the Z-transform (frequency) domain.

A secret image is hidden one bit per 2x2 cover block: each block is taken to
the frequency domain with a 4-point transform, the median coefficient's
integer real part carries the bit at weight 8 (the 4th LSB), and an
adjustment ladder guarantees the bit survives the trip back to pixels.
"""

from fdszt._core import (
    CoeffSelection,
    EmbedFailedError,
    EmbedOutcome,
    Error,
    GrayImage,
    InsufficientCapacityError,
    MetricsReport,
    PayloadExceedsCapacityError,
    PeakMode,
    ZeroDimensionError,
    __version__,
    capacity_bits,
    compute_metrics,
    embed_bit_in_mask,
    embed_image,
    extract_bit_from_mask,
    extract_image,
    forward_zt,
    image_fidelity,
    inverse_zt,
    load_image,
    mse,
    parse_pgm,
    parse_png,
    psnr,
    quantize,
    read_bit,
    save_image,
    select_coeff,
    write_bit,
    write_pgm,
    write_png,
)

__all__ = [
    "CoeffSelection",
    "EmbedFailedError",
    "EmbedOutcome",
    "Error",
    "GrayImage",
    "InsufficientCapacityError",
    "MetricsReport",
    "PayloadExceedsCapacityError",
    "PeakMode",
    "ZeroDimensionError",
    "__version__",
    "capacity_bits",
    "compute_metrics",
    "embed_bit_in_mask",
    "embed_image",
    "extract_bit_from_mask",
    "extract_image",
    "forward_zt",
    "image_fidelity",
    "inverse_zt",
    "load_image",
    "mse",
    "parse_pgm",
    "parse_png",
    "psnr",
    "quantize",
    "read_bit",
    "save_image",
    "select_coeff",
    "write_bit",
    "write_pgm",
    "write_png",
]
