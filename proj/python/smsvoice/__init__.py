"""Voice over concatenated SMS: audio codecs, SMS-safe text, segmentation,
a seeded lossy channel and loss-tolerant reassembly."""

from ._core import (
    AudioClip,
    ChannelConfig,
    Codec,
    CostModel,
    Error,
    Outcome,
    ReassemblyPolicy,
    Segment,
    SegmentationConfig,
    analyze,
    bytes_to_codepoints,
    codec_decode,
    codec_encode,
    codepoints_to_bytes,
    compare_csv,
    connected_group_count,
    decode_segments,
    encode_clip,
    parse_segment,
    reassemble,
    render_segment,
    read_wav,
    segment,
    transmit,
    ulaw_decode_sample,
    ulaw_encode_sample,
    write_wav,
)

__all__ = [name for name in dir() if not name.startswith("_")]
