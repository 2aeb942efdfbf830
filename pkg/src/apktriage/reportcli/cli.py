"""Command-line surface tying the toolkit together.

Verbs: scan, assoc, watch, payclass, report. A single JSON config file
supplies defaults; command-line flags override individual values.
Exit codes: 0 success, 1 input error, 2 internal error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from datetime import datetime, timezone

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, encoding="utf-8") as f:
        cfg = json.load(f)
    if not isinstance(cfg, dict):
        raise ValueError("config must be a JSON object")
    return cfg


def _setting(args, cfg: dict, name: str, default=None):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return cfg.get(name, default)


def _iter_apks(path: str):
    if os.path.isdir(path):
        for root, _dirs, files in os.walk(path):
            for name in sorted(files):
                if name.lower().endswith(".apk"):
                    yield os.path.join(root, name)
    else:
        yield path


def cmd_scan(args, cfg) -> int:
    from apktriage.apkcore import open_apk, load_dangerous_db, permission_profile
    from apktriage.extract import (classify_paradigm, extract_urls,
                                   filter_whitelist, load_suffix_list,
                                   load_whitelist)
    from apktriage.genscan import (KeyUnavailable, decrypt_assets,
                                   detect_generator, fingerprint_for,
                                   load_fingerprints)

    fingerprints = load_fingerprints(_setting(args, cfg, "fingerprint_db"))
    dangerous = load_dangerous_db(_setting(args, cfg, "dangerous_permission_file"))
    suffixes = load_suffix_list(_setting(args, cfg, "suffix_list"))
    wl_path = _setting(args, cfg, "whitelist")
    whitelist = load_whitelist(wl_path) if wl_path else frozenset()

    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for apk_path in _iter_apks(args.input):
            with open(apk_path, "rb") as f:
                apk = open_apk(f.read())
            match = detect_generator(apk, fingerprints)
            decrypted = None
            if match is not None:
                fp = fingerprint_for(match.generator_id, fingerprints)
                if fp.cipher.algo is not None:
                    try:
                        decrypted = decrypt_assets(apk, match, db=fingerprints)
                    except KeyUnavailable:
                        decrypted = None
            urls = extract_urls(apk, user_content=decrypted, psl=suffixes)
            if whitelist:
                urls = filter_whitelist(urls, whitelist, suffixes)
            paradigm = classify_paradigm(apk, match)
            profile = (permission_profile(apk.manifest, dangerous)
                       if apk.manifest else None)
            rec = {
                "sample_id": apk.sample_id,
                "path": apk_path,
                "package": apk.package_name,
                "manifest_valid": apk.manifest_valid,
                "manifest_mtime": apk.manifest_mtime.isoformat()
                if apk.manifest_mtime else None,
                "generator": match.generator_id if match else None,
                "generator_confidence": match.confidence if match else None,
                "paradigm": paradigm.value,
                "urls": sorted(urls.urls),
                "domains": sorted(urls.domains),
                "ip_literals": sorted(urls.ip_literals),
                "permissions": {
                    "dangerous": profile.dangerous_count,
                    "normal": profile.normal_count,
                    "all": profile.all_count,
                } if profile else None,
                "signers": [
                    {"fingerprint": s.fingerprint,
                     "class": s.signature_class,
                     "completeness": s.completeness}
                    for s in apk.signers
                ],
            }
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_assoc(args, cfg) -> int:
    from apktriage.assoc import (AssocConfig, build_graph, graph_to_json,
                                 group_stats, read_features_jsonl)
    from apktriage.reportcli.emit import emit_report

    config = AssocConfig(
        i_max=int(_setting(args, cfg, "i_max", 2)),
        url_overlap_threshold=float(
            _setting(args, cfg, "url_overlap_threshold", 0.7)),
        snapshot_threshold=float(_setting(args, cfg, "snapshot_threshold", 0.9)),
        min_signature_field_matches=int(
            _setting(args, cfg, "min_signature_field_matches", 3)),
    )
    features = read_features_jsonl(args.features)
    graph = build_graph(features, config)
    with open(args.output + ".graph.json", "w", encoding="utf-8") as f:
        f.write(graph_to_json(graph))
    corpus_size = int(_setting(args, cfg, "corpus_size", 0)) or len(features)
    labels = {s.sample_id: s.label for s in features if s.label}
    rows = group_stats(graph, labels, corpus_size)
    emit_report(rows, args.output)
    return EXIT_OK


def cmd_watch(args, cfg) -> int:
    from datetime import timedelta

    from apktriage.infrawatch import (DnsResolver, HttpProber, ScriptedProber,
                                      ScriptedResolver, ScriptedWhois,
                                      TimelineStore, WhoisRecord, Window,
                                      classify_bindings, lifespan, schedule)
    from apktriage.reportcli.emit import emit_report

    window = Window(
        start=_parse_ts(_setting(args, cfg, "window_start")),
        end=_parse_ts(_setting(args, cfg, "window_end")),
    )
    cadence = timedelta(days=int(_setting(args, cfg, "cadence_days", 1)))
    store = TimelineStore(args.store)
    with open(args.domains, encoding="utf-8") as f:
        domains = [d.strip() for d in f if d.strip() and not d.startswith("#")]

    script_path = _setting(args, cfg, "script")
    if script_path:
        with open(script_path, encoding="utf-8") as f:
            script = json.load(f)
        resolver = ScriptedResolver(script.get("resolutions", {}))
        prober = ScriptedProber(script.get("probes", {}))
        whois = ScriptedWhois({
            d: WhoisRecord(registrant=r.get("registrant", ""),
                           country=r.get("country", ""),
                           created=r.get("created", ""))
            for d, r in script.get("whois", {}).items()})
    else:
        resolver, prober, whois = DnsResolver(), HttpProber(), None

    schedule(domains, window, cadence, resolver, prober, whois, store)

    timelines = {d: store.load(d) for d in store.domains()}
    mtimes = {}
    mtime_path = _setting(args, cfg, "manifest_mtimes")
    if mtime_path:
        with open(mtime_path, encoding="utf-8") as f:
            mtimes = {k: _parse_ts(v) for k, v in json.load(f).items()}
    records = [lifespan(t, mtimes.get(d, window.start))
               for d, t in sorted(timelines.items()) if t.probes]
    emit_report(records, args.output + ".lifespan")
    _classes, summary = classify_bindings(timelines)
    with open(args.output + ".bindings.json", "w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2, sort_keys=True)
        f.write("\n")
    return EXIT_OK


def cmd_payclass(args, cfg) -> int:
    from apktriage.payclass import (channel_breakdown, classify_session,
                                    load_licensed_db, read_observations_jsonl)

    licensed = load_licensed_db(_setting(args, cfg, "licensed_db"))
    sessions = read_observations_jsonl(args.observations)
    classifications = [classify_session(obs, licensed)
                       for _sid, obs in sorted(sessions.items())]
    rows, notice = channel_breakdown(classifications)
    result = {
        "sessions": [dataclasses.asdict(c) for c in classifications],
        "fourth_party_channels": [
            {"channel": ch, "count": n, "percent": p} for ch, n, p in rows],
        "notice": notice,
    }
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_report(args, cfg) -> int:
    from apktriage.reportcli.aggregate import corpus_report
    from apktriage.reportcli.emit import emit_report
    from apktriage.reportcli.taxonomy import read_labels_jsonl, validate_label

    labels = read_labels_jsonl(args.labels)
    bad = {l.sample_id: v for l in labels if (v := validate_label(l))}
    if bad and not args.ignore_invalid:
        for sample, violations in sorted(bad.items()):
            print(f"invalid label {sample}: {'; '.join(violations)}",
                  file=sys.stderr)
        return EXIT_INPUT
    report = corpus_report(labels)
    emit_report(report, args.output)
    return EXIT_OK


def _parse_ts(value) -> datetime:
    if value is None:
        raise ValueError("missing timestamp (window start/end required)")
    ts = datetime.fromisoformat(str(value))
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apktriage",
        description="Static analysis and infrastructure monitoring for "
                    "profit-motivated fraud Android apps.")
    parser.add_argument("--config", help="JSON config file with defaults")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("scan", help="parse APKs, detect generators, extract URLs")
    p.add_argument("input", help="APK file or directory")
    p.add_argument("--output", help="JSONL output (default stdout)")
    p.add_argument("--fingerprint-db", dest="fingerprint_db")
    p.add_argument("--whitelist")
    p.add_argument("--suffix-list", dest="suffix_list")
    p.add_argument("--dangerous-permission-file", dest="dangerous_permission_file")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("assoc", help="build the developer-association graph")
    p.add_argument("features", help="features JSONL from prior analysis")
    p.add_argument("--output", required=True, help="output base path")
    p.add_argument("--i-max", dest="i_max", type=int)
    p.add_argument("--url-overlap-threshold", dest="url_overlap_threshold",
                   type=float)
    p.add_argument("--snapshot-threshold", dest="snapshot_threshold", type=float)
    p.add_argument("--min-signature-field-matches",
                   dest="min_signature_field_matches", type=int)
    p.add_argument("--corpus-size", dest="corpus_size", type=int)
    p.set_defaults(func=cmd_assoc)

    p = sub.add_parser("watch", help="run or resume remote-server monitoring")
    p.add_argument("domains", help="file with one domain per line")
    p.add_argument("--store", required=True, help="timeline store directory")
    p.add_argument("--output", required=True, help="output base path")
    p.add_argument("--window-start", dest="window_start")
    p.add_argument("--window-end", dest="window_end")
    p.add_argument("--cadence-days", dest="cadence_days", type=int)
    p.add_argument("--script", help="scripted backend JSON (offline runs)")
    p.add_argument("--manifest-mtimes", dest="manifest_mtimes",
                   help="JSON map domain -> packing timestamp")
    p.set_defaults(func=cmd_watch)

    p = sub.add_parser("payclass", help="classify payment sessions")
    p.add_argument("observations", help="payment observations JSONL")
    p.add_argument("--licensed-db", dest="licensed_db")
    p.add_argument("--output")
    p.set_defaults(func=cmd_payclass)

    p = sub.add_parser("report", help="aggregate labels into a corpus report")
    p.add_argument("labels", help="taxonomy labels JSONL")
    p.add_argument("--output", required=True, help="output base path")
    p.add_argument("--ignore-invalid", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config)
        return args.func(args, cfg)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
