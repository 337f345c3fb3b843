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
"""Writes the synthetic conference dataset under data/demo.

Four populated ontologies describe one shared world of people, papers and
reviews. Each sees most of the world, names classes its own way, drops some
type assertions and may or may not materialize superclasses. Most objects
share an identifier across ontologies; some only share a local name, and
reviews carry ontology-specific names reachable through relations.
"""

import argparse
import itertools
import pathlib
import random

WORLD = "http://demo.org/world#"
RDF_TYPE = "rdf:type"

# concept -> superconcept
HIERARCHY = {
    "Author": "Person",
    "Reviewer": "Person",
    "PCMember": "Person",
    "Chair": "PCMember",
    "Attendee": "Person",
    "AcceptedPaper": "Paper",
    "RejectedPaper": "Paper",
    "Paper": "Document",
    "Review": "Document",
    "Session": "Event",
    "Conference": "Event",
}

ONTOLOGIES = {
    "cmt": {
        "materialize": True,
        "names": {"Person": "Person", "Author": "Author", "Reviewer": "Reviewer", "PCMember": "ProgramCommitteeMember",
                  "Chair": "ProgramCommitteeChair", "Paper": "Paper", "AcceptedPaper": "AcceptedPaper",
                  "RejectedPaper": "RejectedPaper", "Review": "Review", "Document": "Document",
                  "Conference": "Conference"},
    },
    "conftool": {
        "materialize": False,
        "names": {"Person": "Person", "Author": "Contribution_author", "Reviewer": "Reviewer",
                  "PCMember": "Committee_member", "Chair": "Chair", "Paper": "Contribution",
                  "AcceptedPaper": "Accepted_contribution", "Review": "Review", "Session": "Session",
                  "Event": "Event", "Conference": "Conference", "Attendee": "Participant"},
    },
    "ekaw": {
        "materialize": True,
        "names": {"Person": "Person", "Author": "Paper_Author", "Reviewer": "Possible_Reviewer",
                  "PCMember": "PC_Member", "Chair": "PC_Chair", "Paper": "Paper", "AcceptedPaper": "Accepted_Paper",
                  "RejectedPaper": "Rejected_Paper", "Review": "Review", "Document": "Document",
                  "Session": "Session", "Event": "Event", "Conference": "Conference", "Attendee": "Conference_Participant"},
    },
    "sigkdd": {
        "materialize": False,
        "names": {"Person": "Person", "Author": "Author", "Reviewer": "Reviewer", "PCMember": "Program_Committee",
                  "Chair": "Program_Chair", "Paper": "Paper", "Review": "Review", "Document": "Document",
                  "Conference": "Conference", "Attendee": "Listener"},
    },
}


def build_world(rng):
    """Returns (concepts per entity, relations as (subject, name, object))."""
    concepts = {}
    relations = []
    persons = [f"person{i}" for i in range(70)]
    for p in persons:
        roles = set()
        if rng.random() < 0.55:
            roles.add("Author")
        if rng.random() < 0.35:
            roles.add("Reviewer")
        if rng.random() < 0.2:
            roles.add("PCMember")
            if rng.random() < 0.25:
                roles.add("Chair")
        if not roles or rng.random() < 0.3:
            roles.add("Attendee")
        concepts[p] = roles
    authors = [p for p in persons if "Author" in concepts[p]]
    reviewers = [p for p in persons if "Reviewer" in concepts[p] or "PCMember" in concepts[p]]
    for i in range(50):
        paper = f"paper{i}"
        concepts[paper] = {"AcceptedPaper" if rng.random() < 0.6 else "RejectedPaper"}
        relations.append((paper, "contactAuthor", rng.choice(authors)))
        for slot in ("firstReview", "secondReview"):
            review = f"{paper}_{slot}"
            concepts[review] = {"Review"}
            relations.append((paper, slot, review))
            relations.append((review, "reviewedBy", rng.choice(reviewers)))
    for i in range(8):
        concepts[f"session{i}"] = {"Session"}
    concepts["conf2026"] = {"Conference"}
    return concepts, relations


def closure(concept):
    out = [concept]
    while out[-1] in HIERARCHY:
        out.append(HIERARCHY[out[-1]])
    return out


def build_ontology(rng, name, spec, concepts, relations):
    ns = f"http://demo.org/{name}#"
    ids = {}
    for entity in sorted(concepts):
        if rng.random() > 0.85:
            continue
        if entity.endswith("Review"):
            ids[entity] = f"{ns}{name}_{entity.replace('_', '-')}"
        elif rng.random() < 0.25:
            ids[entity] = ns + entity
        else:
            ids[entity] = WORLD + entity
    triples = []
    for entity, uri in ids.items():
        classes = set()
        for concept in concepts[entity]:
            chain = closure(concept) if spec["materialize"] else [concept]
            for c in chain:
                if c in spec["names"] and rng.random() >= 0.08:
                    classes.add(spec["names"][c])
        if not classes:
            triples.append((uri, ns + "label", f'"{entity}"'))
        for c in sorted(classes):
            triples.append((uri, RDF_TYPE, ns + c))
    for s, rel, o in relations:
        if s in ids and o in ids:
            triples.append((ids[s], ns + rel, ids[o]))
    return ids, triples


def write_tsv(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for row in rows:
            f.write("\t".join(row) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "demo"))
    parser.add_argument("--seed", type=int, default=2026)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    concepts, relations = build_world(rng)
    ids = {}
    for name, spec in ONTOLOGIES.items():
        ids[name], triples = build_ontology(rng, name, spec, concepts, relations)
        write_tsv(out / f"{name}.tsv", triples)

    pairs = list(itertools.combinations(ONTOLOGIES, 2))
    for left, right in pairs:
        rows = []
        for concept in sorted(set(ONTOLOGIES[left]["names"]) & set(ONTOLOGIES[right]["names"])):
            rows.append((f"http://demo.org/{left}#{ONTOLOGIES[left]['names'][concept]}",
                         f"http://demo.org/{right}#{ONTOLOGIES[right]['names'][concept]}"))
        write_tsv(out / f"ref_{left}_{right}.tsv", rows)
        # persons only, and only those the rules cannot reach on their own
        imported = []
        for entity in sorted(set(ids[left]) & set(ids[right])):
            a, b = ids[left][entity], ids[right][entity]
            if entity.startswith("person") and a != b and rng.random() < 0.5:
                imported.append((a, b))
        write_tsv(out / f"imported_{left}_{right}.tsv", imported)

    common = ["type_predicate = rdf:type", "max_cycles = 50", "repetitions = 10", "seed = 7", "plot_cycles = 20"]
    for grounding in ("simple", "extended"):
        lines = [f"# synthetic conference dataset, {grounding} grounding", f"name = demo_{grounding}",
                 f"grounding = {grounding}"] + common
        lines += [f"ontology = {name} {name}.tsv" for name in ONTOLOGIES]
        lines += [f"pair = {l} {r} ref_{l}_{r}.tsv" for l, r in pairs]
        if grounding == "extended":
            lines += [f"imported = {l} {r} imported_{l}_{r}.tsv" for l, r in pairs]
        (out / f"{grounding}.conf").write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
