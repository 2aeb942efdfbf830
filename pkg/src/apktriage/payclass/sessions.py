"""Payment-session classification: third-party vs. fourth-party services.

A session groups the payment requests one app issued against one payment
endpoint. A licensed third-party service always points at a single stable
merchant; a fourth-party aggregator rotates recipient accounts (or fans a
single unlicensed domain out over many merchants) to evade tracing.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal

from apktriage.util import pct

KIND_THIRD_PARTY = "ThirdParty"
KIND_FOURTH_PARTY = "FourthParty"
KIND_INDETERMINATE = "Indeterminate"

CHANNEL_RAIL = "ThirdPartyRail"
CHANNEL_BANK = "BankTransfer"
CHANNEL_DIGITAL = "DigitalCurrency"
CHANNEL_UNKNOWN = "Unknown"

CHANNELS = (CHANNEL_RAIL, CHANNEL_BANK, CHANNEL_DIGITAL, CHANNEL_UNKNOWN)

# Recipient-identifier shapes that mark a digital-currency address even when
# the observation carries no channel hint: base58-style (BTC-like) and
# bech32/hex-style (segwit, EVM) addresses.
DEFAULT_DIGITAL_PATTERNS = (
    r"^[13][1-9A-HJ-NP-Za-km-z]{25,34}$",
    r"^bc1[02-9ac-hj-np-z]{11,71}$",
    r"^0x[0-9a-fA-F]{40}$",
    r"^T[1-9A-HJ-NP-Za-km-z]{33}$",
)

MIN_CONFIDENT_OBSERVATIONS = 3


class EmptySession(ValueError):
    """A session must contain at least one observation."""


@dataclass(frozen=True)
class PaymentObservation:
    session_id: str
    request_index: int
    amount: Decimal
    payment_domain: str
    recipient_id: str
    channel_hint: str = CHANNEL_UNKNOWN

    def __post_init__(self):
        if self.amount <= 0:
            raise ValueError(f"amount must be positive, got {self.amount}")
        if self.channel_hint not in CHANNELS:
            raise ValueError(f"unknown channel hint {self.channel_hint!r}")


@dataclass(frozen=True)
class PaymentClassification:
    session_id: str
    service_kind: str
    channel: str
    evidence: tuple[str, ...] = field(default_factory=tuple)


def _infer_channel(obs, digital_patterns) -> tuple[str, list[str]]:
    evidence = []
    hints = Counter(o.channel_hint for o in obs if o.channel_hint != CHANNEL_UNKNOWN)
    if hints:
        channel = max(sorted(hints), key=lambda c: hints[c])
        evidence.append(f"majority channel hint {channel} ({hints[channel]}/{len(obs)})")
    else:
        channel = CHANNEL_UNKNOWN
    if channel == CHANNEL_UNKNOWN:
        compiled = [re.compile(p) for p in digital_patterns]
        matched = [o.recipient_id for o in obs
                   if any(p.match(o.recipient_id) for p in compiled)]
        if matched and len(matched) == len(obs):
            channel = CHANNEL_DIGITAL
            evidence.append(
                f"all {len(obs)} recipient identifiers match digital-currency "
                f"address syntax")
    return channel, evidence


def classify_session(obs, licensed_db,
                     digital_patterns=DEFAULT_DIGITAL_PATTERNS) -> PaymentClassification:
    """Classify one session.

    ThirdParty: licensed payment domain and a single stable recipient.
    FourthParty: rotating recipients, or an unlicensed domain spread over
    at least two distinct recipients. Fewer than three observations never
    yield a confident verdict (Indeterminate).
    """
    obs = sorted(obs, key=lambda o: o.request_index)
    if not obs:
        raise EmptySession("session contains no observations")
    session_id = obs[0].session_id
    if any(o.session_id != session_id for o in obs):
        raise ValueError("observations span multiple sessions")
    indices = [o.request_index for o in obs]
    if len(set(indices)) != len(indices):
        raise ValueError("duplicate request_index within session")

    channel, evidence = _infer_channel(obs, digital_patterns)
    recipients = {o.recipient_id for o in obs}
    domains = {o.payment_domain.lower() for o in obs}
    licensed = all(d in licensed_db for d in domains)

    if len(obs) < MIN_CONFIDENT_OBSERVATIONS:
        evidence.append(
            f"only {len(obs)} observation(s); need "
            f"{MIN_CONFIDENT_OBSERVATIONS} for a confident verdict")
        return PaymentClassification(session_id, KIND_INDETERMINATE,
                                     channel, tuple(evidence))

    if len(recipients) > 1:
        evidence.append(
            f"{len(recipients)} distinct recipients over {len(obs)} requests")
        kind = KIND_FOURTH_PARTY
    elif not licensed and len(recipients) >= 2:
        kind = KIND_FOURTH_PARTY
    elif licensed:
        evidence.append(
            f"licensed domain(s) {sorted(domains)} with a single stable recipient")
        kind = KIND_THIRD_PARTY
    else:
        evidence.append("unlicensed domain but a single stable recipient")
        kind = KIND_INDETERMINATE
    return PaymentClassification(session_id, kind, channel, tuple(evidence))


def channel_breakdown(classifications, places: int = 2):
    """Channel distribution over fourth-party sessions.

    Returns (rows, notice): rows are (channel, count, percentage) with
    percentages over all fourth-party sessions including Unknown, so the
    column sums to 100 within rounding. An empty result carries an
    explicit notice instead of silent emptiness.
    """
    fourth = [c for c in classifications if c.service_kind == KIND_FOURTH_PARTY]
    if not fourth:
        return [], "no fourth-party sessions observed"
    counts = Counter(c.channel for c in fourth)
    total = len(fourth)
    rows = [(ch, counts[ch], pct(counts[ch], total, places))
            for ch in CHANNELS if counts[ch]]
    return rows, None


def read_observations_jsonl(path) -> dict[str, list[PaymentObservation]]:
    """Group a JSON-lines observation file by session."""
    sessions: dict[str, list[PaymentObservation]] = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            o = PaymentObservation(
                session_id=rec["session_id"],
                request_index=int(rec["request_index"]),
                amount=Decimal(str(rec["amount"])),
                payment_domain=rec["payment_domain"],
                recipient_id=rec["recipient_id"],
                channel_hint=rec.get("channel_hint", CHANNEL_UNKNOWN),
            )
            sessions.setdefault(o.session_id, []).append(o)
    return sessions


def load_licensed_db(path) -> frozenset[str]:
    """One licensed payment-service domain per line; # comments allowed."""
    domains = set()
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip().lower()
            if line and not line.startswith("#"):
                domains.add(line)
    return frozenset(domains)
