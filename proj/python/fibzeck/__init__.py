"""Exact Zeckendorf / fibbinary / golden-ratio arithmetic.

Thin Python facade over the C++ core. All integer arguments and results are
ordinary Python ints of any size; nothing is ever truncated to a machine
word.
"""

from fibzeck._core import (
    DecodeError,
    FibbinaryStream,
    GoldenNum,
    SequenceRecord,
    VerifyMismatch,
    VerifyReport,
    __version__,
    decode_bits,
    decode_stream,
    encode_bits,
    encode_int,
    encode_stream,
    fib_map,
    fib_unmap,
    fibonacci,
    floor_n_phi,
    floor_n_phi_sq,
    is_fibbinary,
    isqrt,
    odfib,
    odfib_inverse,
    sequence_emit,
    tau_pow,
    verify_theorem,
    z_closed,
    z_recursive,
    zeck_decode,
    zeck_encode,
)

__all__ = [
    "DecodeError",
    "FibbinaryStream",
    "GoldenNum",
    "SequenceRecord",
    "VerifyMismatch",
    "VerifyReport",
    "__version__",
    "decode_bits",
    "decode_stream",
    "encode_bits",
    "encode_int",
    "encode_stream",
    "fib_map",
    "fib_unmap",
    "fibonacci",
    "floor_n_phi",
    "floor_n_phi_sq",
    "is_fibbinary",
    "isqrt",
    "odfib",
    "odfib_inverse",
    "sequence_emit",
    "tau_pow",
    "verify_theorem",
    "z_closed",
    "z_recursive",
    "zeck_decode",
    "zeck_encode",
]
