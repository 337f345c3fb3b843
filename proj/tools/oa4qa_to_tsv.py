#!/usr/bin/env python3
# Copyright 2026, The squ Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Converts populated OWL ontologies and Alignment-format references to squ TSVs.

    oa4qa_to_tsv.py --ontologies DIR --alignments DIR --out DIR [--imported DIR]

Every *.owl / *.rdf file in --ontologies becomes <name>.tsv, holding its
individuals' rdf:type assertions (named classes only) and their object
property assertions between individuals. Every alignment file named
<left>-<right>.rdf in --alignments becomes ref_<left>_<right>.tsv with its
'=' cells between classes. Optional --imported holds ready-made instance
alignment TSVs named imported_<left>_<right>.tsv. Two manifests are written:
simple.conf and extended.conf.

Needs rdflib.
"""

import argparse
import pathlib
import sys

try:
    import rdflib
    from rdflib.namespace import OWL, RDF, RDFS
except ImportError:  # pragma: no cover
    sys.exit("oa4qa_to_tsv.py needs rdflib (pip install rdflib)")

ALIGN = rdflib.Namespace("http://knowledgeweb.semanticweb.org/heterogeneity/alignment#")
ONTOLOGY_SUFFIXES = (".owl", ".rdf", ".ttl")


def load(path):
    g = rdflib.Graph()
    fmt = "turtle" if path.suffix == ".ttl" else "xml"
    g.parse(str(path), format=fmt)
    return g


def ontology_triples(g):
    schema_ns = (str(OWL), str(RDFS), str(RDF))
    types = set()
    for s, o in g.subject_objects(RDF.type):
        if isinstance(s, rdflib.URIRef) and isinstance(o, rdflib.URIRef) and not str(o).startswith(schema_ns):
            types.add((str(s), "rdf:type", str(o)))
    individuals = {rdflib.URIRef(s) for s, _, _ in types}
    relations = set()
    for s, p, o in g:
        if p != RDF.type and s in individuals and o in individuals:
            relations.add((str(s), str(p), str(o)))
    return sorted(types) + sorted(relations)


def class_cells(g):
    cells = []
    for cell in g.subjects(RDF.type, ALIGN.Cell):
        e1 = g.value(cell, ALIGN.entity1)
        e2 = g.value(cell, ALIGN.entity2)
        rel = g.value(cell, ALIGN.relation)
        if e1 is None or e2 is None or (rel is not None and str(rel) != "="):
            continue
        cells.append((str(e1), str(e2)))
    return sorted(set(cells))


def write_tsv(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for row in rows:
            if any("\t" in x or "\n" in x for x in row):
                continue
            f.write("\t".join(row) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--ontologies", required=True, type=pathlib.Path)
    parser.add_argument("--alignments", required=True, type=pathlib.Path)
    parser.add_argument("--imported", type=pathlib.Path)
    parser.add_argument("--out", required=True, type=pathlib.Path)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    names = []
    for path in sorted(args.ontologies.iterdir()):
        if path.suffix not in ONTOLOGY_SUFFIXES:
            continue
        name = path.stem
        triples = ontology_triples(load(path))
        write_tsv(args.out / f"{name}.tsv", triples)
        names.append(name)
        print(f"{name}: {len(triples)} triples")

    pairs = []
    for path in sorted(args.alignments.iterdir()):
        left, _, right = path.stem.partition("-")
        if left not in names or right not in names:
            print(f"skipping {path.name}: not a <left>-<right> pair of converted ontologies")
            continue
        write_tsv(args.out / f"ref_{left}_{right}.tsv", class_cells(load(path)))
        pairs.append((left, right))

    imported = {}
    if args.imported:
        for left, right in pairs:
            src = args.imported / f"imported_{left}_{right}.tsv"
            if src.exists():
                (args.out / src.name).write_bytes(src.read_bytes())
                imported[(left, right)] = src.name

    for grounding in ("simple", "extended"):
        lines = [f"name = oa4qa_{grounding}", f"grounding = {grounding}", "max_cycles = 50", "repetitions = 10",
                 "seed = 0"]
        lines += [f"ontology = {n} {n}.tsv" for n in names]
        lines += [f"pair = {l} {r} ref_{l}_{r}.tsv" for l, r in pairs]
        if grounding == "extended":
            lines += [f"imported = {l} {r} {f}" for (l, r), f in sorted(imported.items())]
        (args.out / f"{grounding}.conf").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{len(names)} ontologies, {len(pairs)} pairs, {len(imported)} imported alignment files")


if __name__ == "__main__":
    main()
