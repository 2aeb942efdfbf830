from apktriage.payclass.sessions import (
    CHANNEL_BANK,
    CHANNEL_DIGITAL,
    CHANNEL_RAIL,
    CHANNEL_UNKNOWN,
    KIND_FOURTH_PARTY,
    KIND_INDETERMINATE,
    KIND_THIRD_PARTY,
    EmptySession,
    PaymentClassification,
    PaymentObservation,
    channel_breakdown,
    classify_session,
    load_licensed_db,
    read_observations_jsonl,
)

__all__ = [
    "CHANNEL_BANK", "CHANNEL_DIGITAL", "CHANNEL_RAIL", "CHANNEL_UNKNOWN",
    "KIND_FOURTH_PARTY", "KIND_INDETERMINATE", "KIND_THIRD_PARTY",
    "EmptySession", "PaymentClassification", "PaymentObservation",
    "channel_breakdown", "classify_session", "load_licensed_db",
    "read_observations_jsonl",
]
