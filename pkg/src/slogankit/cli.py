"""Command-line interface tying the pipeline stages together.

Stages read and write line-delimited JSON so they compose with standard
shell tools; report-producing commands additionally render figures next
to their delimited tables.

Exit codes: 0 success, 1 bad input or usage, 2 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from collections import Counter

from .annotate import BuiltinTagger, HttpTagger, SubprocessTagger
from .baselines import (
    first_k_words,
    first_sentence,
    generate_slogans,
    mine_skeleton_model,
    sweep_first_k,
)
from .corpus import (
    CleaningConfig,
    clean_pipeline,
    compute_corpus_stats,
    split_dataset,
)
from .ctrlprep import condition_rows, upsample_by_code
from .delex import delexicalise_company
from .entmask import filter_hallucination_pairs, mask_pair
from .genclient import DecodingConfig, HttpBackend, end_to_end_generate
from .jsonl import (
    load_company_records,
    load_pairs,
    read_jsonl,
    write_dataclass_jsonl,
    write_jsonl,
)
from .metrics import abstractiveness, cohens_kappa, diversity, mean_rouge
from .reporting import save_length_histograms, save_metric_bars, save_sweep_curve
from .tokens import STOP_WORDS, rouge_tokens

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; we reserve 2 for I/O."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _load_config(path: str) -> dict:
    if path.endswith(".toml"):
        import tomli

        with open(path, "rb") as handle:
            return tomli.load(handle)
    if path.endswith(".json"):
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    raise ValueError("config must be a .toml or .json file: %r" % path)


def _make_tagger(args):
    if getattr(args, "tagger_url", None):
        return HttpTagger(args.tagger_url)
    if getattr(args, "tagger_command", None):
        return SubprocessTagger(args.tagger_command.split())
    return BuiltinTagger()


def cmd_clean(args) -> int:
    records = load_company_records(args.input)
    config = (
        CleaningConfig.from_dict(_load_config(args.config))
        if args.config
        else CleaningConfig()
    )
    pairs, rejections = clean_pipeline(records, config, _make_tagger(args))
    write_dataclass_jsonl(args.output, pairs)
    if args.rejections:
        write_dataclass_jsonl(args.rejections, rejections)
    print(
        "kept %d of %d records (%d rejected)"
        % (len(pairs), len(records), len(rejections))
    )
    return 0


def cmd_split(args) -> int:
    pairs = load_pairs(args.input)
    out = split_dataset(pairs, args.valid_fraction, args.test_fraction, args.seed)
    write_dataclass_jsonl(args.output, out)
    counts = Counter(pair.split for pair in out)
    print(
        "train=%d valid=%d test=%d"
        % (counts["train"], counts["valid"], counts["test"])
    )
    return 0


def cmd_mask(args) -> int:
    pairs = load_pairs(args.input)
    if args.split:
        pairs = [p for p in pairs if p.split == args.split]
    tagger = _make_tagger(args)
    rows = []
    for pair in pairs:
        delexed = delexicalise_company(pair.company_name, pair.description)
        masked_desc, masked_slogan, mask_map = mask_pair(
            delexed.text,
            pair.slogan,
            tagger.entities(delexed.text),
            tagger.entities(pair.slogan),
        )
        rows.append(
            {
                "id": pair.id,
                "masked_description": masked_desc,
                "masked_slogan": masked_slogan,
                "reverse_map": dict(mask_map.reverse),
                "company_surface": delexed.surface_form,
            }
        )
    if args.split == "train" and not args.keep_hallucinated:
        before = len(rows)
        rows = filter_hallucination_pairs(rows)
        if before != len(rows):
            print("dropped %d pairs with unsupported mask tokens" % (before - len(rows)))
    write_jsonl(args.output, rows)
    print("masked %d pairs" % len(rows))
    return 0


def cmd_prepare(args) -> int:
    rows = list(read_jsonl(args.input))
    conditioned = condition_rows(rows, _make_tagger(args))
    if args.upsample_target:
        conditioned = upsample_by_code(conditioned, args.upsample_target, args.seed)
    write_jsonl(args.output, conditioned)
    counts = Counter(row["code"] for row in conditioned)
    print(" ".join("%s=%d" % (c, counts[c]) for c in sorted(counts)))
    return 0


def _description_keywords(description: str, limit: int = 5) -> list[str]:
    counts: Counter = Counter()
    first_seen: dict[str, int] = {}
    for position, token in enumerate(rouge_tokens(description)):
        if token in STOP_WORDS or len(token) <= 2:
            continue
        counts[token] += 1
        first_seen.setdefault(token, position)
    ranked = sorted(counts, key=lambda t: (-counts[t], first_seen[t]))
    return ranked[:limit]


def cmd_baseline(args) -> int:
    pairs = load_pairs(args.input)
    rows = []
    if args.system == "first-sentence":
        for pair in pairs:
            rows.append(
                {
                    "id": pair.id,
                    "system": "first-sentence",
                    "slogan": first_sentence(pair.description),
                }
            )
    elif args.system == "first-k":
        for pair in pairs:
            rows.append(
                {
                    "id": pair.id,
                    "system": "first-k",
                    "slogan": first_k_words(pair.description, args.k),
                }
            )
    else:  # ga
        train = load_pairs(args.train) if args.train else pairs
        model = mine_skeleton_model([p.slogan for p in train])
        for index, pair in enumerate(pairs):
            keywords = _description_keywords(pair.description)
            for slogan in generate_slogans(
                model, keywords, n=args.num_return, seed=args.seed + index
            ):
                rows.append({"id": pair.id, "system": "ga", "slogan": slogan})
    write_jsonl(args.output, rows)
    print("wrote %d candidates" % len(rows))
    return 0


def cmd_sweep_k(args) -> int:
    pairs = load_pairs(args.input)
    if args.k_min < 1 or args.k_max < args.k_min:
        raise ValueError("need 1 <= k-min <= k-max")
    best, scores = sweep_first_k(pairs, range(args.k_min, args.k_max + 1))
    with open(args.output, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, delimiter="\t")
        writer.writerow(["k", "mean_unigram_f1"])
        for k in sorted(scores):
            writer.writerow([k, "%.6f" % scores[k]])
    if args.figure:
        save_sweep_curve(scores, best, args.figure)
    print("best k = %d (mean unigram F1 %.4f)" % (best, scores[best]))
    return 0


def cmd_generate(args) -> int:
    pairs = load_pairs(args.input)
    backend = HttpBackend(args.url, timeout=args.timeout)
    decoding = DecodingConfig(
        strategy=args.strategy,
        top_p=args.top_p,
        temperature=args.temperature,
        repetition_penalty=args.repetition_penalty,
        max_new_tokens=args.max_new_tokens,
    )
    tagger = _make_tagger(args)
    rows = []
    for index, pair in enumerate(pairs):
        generated = end_to_end_generate(
            pair.company_name,
            pair.description,
            backend,
            decoding=decoding,
            num_return=args.num_return,
            tagger=tagger,
            seed=args.seed + index,
        )
        for _, slogan in generated:
            rows.append({"id": pair.id, "system": args.system, "slogan": slogan})
    write_jsonl(args.output, rows)
    print("wrote %d candidates" % len(rows))
    return 0


def cmd_evaluate(args) -> int:
    references = {pair.id: pair for pair in load_pairs(args.references)}
    by_system: dict[str, dict[str, list[str]]] = {}
    for row in read_jsonl(args.candidates):
        for key in ("id", "system", "slogan"):
            if key not in row:
                raise ValueError("candidate row missing %r: %r" % (key, row))
        if row["id"] not in references:
            raise ValueError("candidate id %r has no reference" % row["id"])
        by_system.setdefault(row["system"], {}).setdefault(row["id"], []).append(
            row["slogan"]
        )

    table: dict[str, dict[str, float]] = {}
    for system, groups in sorted(by_system.items()):
        refs = []
        cands = []
        for pair_id, slogans in groups.items():
            for slogan in slogans:
                refs.append(references[pair_id].slogan)
                cands.append(slogan)
        scores = {
            "rouge-1": mean_rouge(refs, cands, "1"),
            "rouge-2": mean_rouge(refs, cands, "2"),
            "rouge-l": mean_rouge(refs, cands, "l"),
            "diversity": diversity(list(groups.values())),
            "abstractiveness": abstractiveness(
                [references[pid].description for pid in groups],
                list(groups.values()),
            ),
        }
        table[system] = scores

    with open(args.output, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, delimiter="\t")
        writer.writerow(["system", "metric", "value"])
        for system, scores in table.items():
            for metric, value in scores.items():
                writer.writerow([system, metric, "%.6f" % value])
    if args.figure:
        save_metric_bars(table, args.figure)
    for system, scores in table.items():
        print(
            "%s: %s"
            % (system, " ".join("%s=%.4f" % kv for kv in scores.items()))
        )
    return 0


def cmd_stats(args) -> int:
    pairs = load_pairs(args.input)
    stats = compute_corpus_stats(pairs, _make_tagger(args))
    with open(args.output, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, delimiter="\t")
        writer.writerow(["key", "value"])
        writer.writerow(["n_pairs", stats.n_pairs])
        writer.writerow(["pct_slogan_in_desc", "%.6f" % stats.pct_slogan_in_desc])
        writer.writerow(["pct_unigram_overlap", "%.6f" % stats.pct_unigram_overlap])
        writer.writerow(
            ["pct_desc_with_company", "%.6f" % stats.pct_desc_with_company]
        )
        for etype, columns in stats.entity_type_table.items():
            for column, value in columns.items():
                writer.writerow(["entity.%s.%s" % (etype, column), "%.6f" % value])
        for name, count in sorted(
            stats.industry_histogram.items(), key=lambda kv: (-kv[1], kv[0])
        ):
            writer.writerow(["industry.%s" % name, count])
        for length in sorted(stats.slogan_length_histogram):
            writer.writerow(
                ["slogan_words.%d" % length, stats.slogan_length_histogram[length]]
            )
        for length in sorted(stats.description_length_histogram):
            writer.writerow(
                [
                    "description_words.%d" % length,
                    stats.description_length_histogram[length],
                ]
            )
    if args.figure:
        save_length_histograms(
            stats.slogan_length_histogram,
            stats.description_length_histogram,
            args.figure,
        )
    print(
        "%d pairs; slogan-in-description %.1f%%; unigram overlap %.1f%%"
        % (
            stats.n_pairs,
            100 * stats.pct_slogan_in_desc,
            100 * stats.pct_unigram_overlap,
        )
    )
    return 0


def cmd_kappa(args) -> int:
    ratings_a = []
    ratings_b = []
    with open(args.input, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle, delimiter=args.delimiter)
        for index, row in enumerate(reader):
            if not row:
                continue
            if index == 0 and args.header:
                continue
            if len(row) < 2:
                raise ValueError(
                    "%s: line %d has %d column(s); need 2"
                    % (args.input, index + 1, len(row))
                )
            ratings_a.append(row[0])
            ratings_b.append(row[1])
    value = cohens_kappa(ratings_a, ratings_b)
    print("kappa\t%.4f" % value)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="slogankit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    commands = parser.add_subparsers(dest="command", required=True)

    def tagger_options(sub):
        group = sub.add_mutually_exclusive_group()
        group.add_argument(
            "--tagger-url", help="HTTP tagger endpoint (JSON protocol)"
        )
        group.add_argument(
            "--tagger-command",
            help="tagger subprocess command line (JSON-lines protocol)",
        )

    sub = commands.add_parser("clean", help="turn raw records into slogan pairs")
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True)
    sub.add_argument("--rejections", help="where to write the rejection log")
    sub.add_argument("--config", help="cleaning settings (.toml or .json)")
    tagger_options(sub)
    sub.set_defaults(func=cmd_clean)

    sub = commands.add_parser("split", help="assign train/valid/test splits")
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True)
    sub.add_argument("--valid-fraction", type=float, default=0.02)
    sub.add_argument("--test-fraction", type=float, default=0.02)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=cmd_split)

    sub = commands.add_parser("mask", help="mask company names and entities")
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True)
    sub.add_argument(
        "--split",
        choices=("train", "valid", "test"),
        help="only process pairs from this split",
    )
    sub.add_argument(
        "--keep-hallucinated",
        action="store_true",
        help="keep train pairs whose slogan masks are absent from the description",
    )
    tagger_options(sub)
    sub.set_defaults(func=cmd_mask)

    sub = commands.add_parser(
        "prepare", help="attach control codes and balance them"
    )
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True)
    sub.add_argument(
        "--upsample-target",
        type=int,
        help="duplicate minority-code rows up to this count",
    )
    sub.add_argument("--seed", type=int, default=0)
    tagger_options(sub)
    sub.set_defaults(func=cmd_prepare)

    sub = commands.add_parser("baseline", help="run a non-neural baseline")
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True)
    sub.add_argument(
        "--system", choices=("first-sentence", "first-k", "ga"), required=True
    )
    sub.add_argument("--k", type=int, default=11, help="words kept by first-k")
    sub.add_argument(
        "--train", help="pairs whose slogans seed the genetic search"
    )
    sub.add_argument("--num-return", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=cmd_baseline)

    sub = commands.add_parser(
        "sweep-k", help="tune the first-k baseline, write table and figure"
    )
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True, help="TSV of k vs score")
    sub.add_argument("--figure", help="PNG path for the sweep curve")
    sub.add_argument("--k-min", type=int, default=1)
    sub.add_argument("--k-max", type=int, default=20)
    sub.set_defaults(func=cmd_sweep_k)

    sub = commands.add_parser("generate", help="call a generation service")
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True)
    sub.add_argument("--url", required=True, help="service base URL")
    sub.add_argument("--system", default="neural", help="system label for output rows")
    sub.add_argument("--strategy", choices=("greedy", "nucleus"), default="nucleus")
    sub.add_argument("--top-p", type=float, default=0.95)
    sub.add_argument("--temperature", type=float, default=1.0)
    sub.add_argument("--repetition-penalty", type=float, default=1.2)
    sub.add_argument("--max-new-tokens", type=int, default=20)
    sub.add_argument("--num-return", type=int, default=1)
    sub.add_argument("--timeout", type=float, default=30.0)
    sub.add_argument("--seed", type=int, default=0)
    tagger_options(sub)
    sub.set_defaults(func=cmd_generate)

    sub = commands.add_parser(
        "evaluate", help="score candidates, write table and figure"
    )
    sub.add_argument("--references", required=True)
    sub.add_argument("--candidates", required=True)
    sub.add_argument("--output", required=True, help="TSV of per-system metrics")
    sub.add_argument("--figure", help="PNG path for the metric bars")
    sub.set_defaults(func=cmd_evaluate)

    sub = commands.add_parser(
        "stats", help="corpus statistics, write table and figure"
    )
    sub.add_argument("--input", required=True)
    sub.add_argument("--output", required=True, help="TSV of corpus statistics")
    sub.add_argument("--figure", help="PNG path for length histograms")
    tagger_options(sub)
    sub.set_defaults(func=cmd_stats)

    sub = commands.add_parser(
        "kappa", help="inter-rater agreement from a two-column file"
    )
    sub.add_argument("--input", required=True)
    sub.add_argument("--delimiter", default="\t")
    sub.add_argument(
        "--header", action="store_true", help="skip the first line"
    )
    sub.set_defaults(func=cmd_kappa)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
