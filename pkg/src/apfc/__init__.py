"""Block-adaptive Shannon and Gilbert-Moore prefix coding with table-driven decoding."""
from .adaptive import CodingMode, CoderState, decode_stream, encode_stream, rebuild_code, table_width
from .bitio import BitSink, BitSource, Payload
from .codebuilder import (PrefixCode, canonical_assign, fixed_length_code, gilbert_moore_code,
                          shannon_code, shannon_lengths)
from .container import StreamHeader, read_container, write_container
from .errors import ApfcError, CorruptStreamError, FormatError, UsageError
from .model import (AlphabetParams, FrequencyTable, SmoothedDistribution, derive_params,
                    empirical_entropy, smoothed_distribution)

__version__ = "0.1.0"
