#!/usr/bin/env python3
"""Convert a metrically annotated corpus into the escandir `signs` TSV.

Input: TEI XML files whose verse elements carry the stress annotation in a
`met` attribute, for example

    <l n="1" met="-+---+---+-">En tanto que de rosa y azucena</l>

Each `<l>` becomes one line `verse<TAB>-+---+---+-`. Files are processed in
sorted path order so the output is reproducible; verses keep document order
within a file. Lines whose annotation is missing or not made of '+' and '-'
are reported on stderr and skipped.

Usage:
    convert_corpus.py CORPUS_DIR_OR_FILES... > fixed_meter.tsv
    escandir eval --corpus fixed_meter.tsv --corpus-format signs --mode fixed
"""

import argparse
import pathlib
import re
import sys
import xml.etree.ElementTree as ET

SIGNS = re.compile(r"^[+-]+$")


def local_name(tag):
    return tag.rsplit("}", 1)[-1]


def verse_text(element):
    text = "".join(element.itertext())
    return " ".join(text.split())


def convert_file(path, out, limit):
    written = 0
    for element in ET.parse(path).iter():
        if local_name(element.tag) != "l":
            continue
        met = (element.get("met") or "").strip()
        text = verse_text(element)
        if not text or not SIGNS.match(met) or "+" not in met:
            print(f"{path}: skipping verse without usable met: {text!r}", file=sys.stderr)
            continue
        out.write(f"{text}\t{met}\n")
        written += 1
        if limit is not None and written >= limit:
            break
    return written


def inputs(paths):
    for p in map(pathlib.Path, paths):
        if p.is_dir():
            yield from sorted(p.rglob("*.xml"))
        else:
            yield p


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("paths", nargs="+", help="TEI files or directories searched for *.xml")
    parser.add_argument("--limit", type=int, help="stop after this many verses in total")
    args = parser.parse_args(argv)

    total = 0
    for path in inputs(args.paths):
        remaining = None if args.limit is None else args.limit - total
        if remaining is not None and remaining <= 0:
            break
        total += convert_file(path, sys.stdout, remaining)
    print(f"{total} verses", file=sys.stderr)
    return 0 if total else 1


if __name__ == "__main__":
    sys.exit(main())
