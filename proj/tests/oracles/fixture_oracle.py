#!/usr/bin/env python3
"""Independent reference computation for the bundled fixture.

Recomputes, from the fixture files alone, the values frozen into
tests/data/fixture/expected.tsv: corpus IC, res/path bigram scores,
second-order vector relatedness, the o2 baseline, Spearman's rho and the
threshold sweep rows. Shares no code with the C++ library.

    python3 tests/oracles/fixture_oracle.py > tests/data/fixture/expected.tsv
"""

import math
import os
import re

HERE = os.path.dirname(os.path.abspath(__file__))
FIX = os.path.join(HERE, "..", "data", "fixture")


def rows(name):
    with open(os.path.join(FIX, name), encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.strip() and not line.startswith("#"):
                yield line.split("\t")


concepts = [r[0] for r in rows("concepts.tsv")]
parents = {c: set() for c in concepts}
links = {c: set() for c in concepts}  # undirected, any relation kind
for s, rel, t in rows("relations.tsv"):
    if rel == "PAR":
        parents[s].add(t)
    elif rel == "CHD":
        parents[t].add(s)
    if s != t:
        links[s].add(t)
        links[t].add(s)
children = {c: {d for d in concepts if c in parents[d]} for c in concepts}
root = next(c for c in concepts if not parents[c])

definitions = {c: [] for c in concepts}
for r in rows("definitions.tsv"):
    definitions[r[0]].append(r[1])
index = {}
for term, cid in rows("index.tsv"):
    index.setdefault(term.lower(), set()).add(cid)


def ancestors(c):
    out = {c}
    for p in parents[c]:
        out |= ancestors(p)
    return out


def descendants(c):
    out = set()
    for k in children[c]:
        out |= {k} | descendants(k)
    return out


# Corpus IC, add-one smoothing, natural log.
freq = {c: 0 for c in concepts}
for cid, n in rows("freq.tsv"):
    freq[cid] += int(n)
smoothed = {c: freq[c] + 1 for c in concepts}
total = sum(smoothed.values())
IC = {}
for c in concepts:
    mass = smoothed[c] + sum(smoothed[d] for d in descendants(c))
    IC[c] = 0.0 if c == root else -math.log(mass / total)


def res(a, b):
    shared = ancestors(a) & ancestors(b)
    return max(IC[x] for x in shared)  # max over shared = max over the LCS set


def bfs_nodes(a, b):
    if a == b:
        return 1
    nbr = {c: parents[c] | children[c] for c in concepts}
    seen, frontier, d = {a}, [a], 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in nbr[u]:
                if v == b:
                    return d + 1
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    raise ValueError("unreachable")


def path(a, b):
    return 1.0 / bfs_nodes(a, b)


def tokenize(text):
    return re.findall(r"[a-z0-9\x80-￿]+", text.lower())


with open(os.path.join(FIX, "corpus.txt"), encoding="utf-8") as fh:
    corpus_lines = fh.read().split("\n")
bigram_types = set()
bigram_counts = {}
for line in corpus_lines:
    toks = tokenize(line)
    for x, y in zip(toks, toks[1:]):
        if x == y:
            continue
        key = tuple(sorted((x, y)))
        bigram_types.add(key)
        bigram_counts[key] = bigram_counts.get(key, 0) + 1


def scored(measure):
    out = {}
    for a, b in sorted(bigram_types):
        if a in index and b in index:
            out[(a, b)] = max(measure(s1, s2) for s1 in index[a] for s2 in index[b])
    return out


def matrix_at(scores, threshold):
    return {k: v for k, v in scores.items() if v > threshold}


def row(matrix, w):
    r = {}
    for (a, b), v in matrix.items():
        if a == w:
            r[b] = v
        elif b == w:
            r[a] = v
    return r


def supergloss(c):
    srcs = [c] + sorted(links[c])
    toks = []
    for s in srcs:
        for d in definitions[s]:
            toks += tokenize(d)
    if not toks:
        raise LookupError("empty_gloss")
    return toks


def second_order(c, matrix):
    acc, k = {}, 0
    for t in supergloss(c):
        r = row(matrix, t)
        if not r:
            continue
        k += 1
        for w, v in r.items():
            acc[w] = acc.get(w, 0.0) + v
    if k == 0:
        raise LookupError("no_signal")
    return {w: v / k for w, v in acc.items()}


def cos(u, v):
    dot = sum(u[w] * v[w] for w in u if w in v)
    nu = math.sqrt(sum(x * x for x in u.values()))
    nv = math.sqrt(sum(x * x for x in v.values()))
    return dot / (nu * nv)


def relate(t1, t2, matrix):
    if t1 not in index or t2 not in index:
        raise LookupError("unmappable")
    return max(cos(second_order(a, matrix), second_order(b, matrix))
               for a in sorted(index[t1]) for b in sorted(index[t2]))


def spearman(x, y):
    def ranks(v):
        out = [0.0] * len(v)
        for i, a in enumerate(v):
            less = sum(1 for b in v if b < a)
            ties = sum(1 for b in v if b == a)
            out[i] = less + (ties + 1) / 2.0
        return out
    rx, ry = ranks(x), ranks(y)
    n = len(x)
    mx, my = sum(rx) / n, sum(ry) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    sxx = sum((a - mx) ** 2 for a in rx)
    syy = sum((b - my) ** 2 for b in ry)
    if sxx == 0 or syy == 0:
        raise ArithmeticError("degenerate ranking")
    return sxy / math.sqrt(sxx * syy)


gold = []
with open(os.path.join(FIX, "gold.csv"), encoding="utf-8") as fh:
    for i, line in enumerate(fh):
        f = line.strip().split(",")
        if i == 0 and f[2] == "score":
            continue
        gold.append((f[0], f[1], float(f[2])))


def evaluate(matrix):
    human, system, skipped = [], [], 0
    scores = []
    for t1, t2, h in gold:
        try:
            s = relate(t1, t2, matrix)
        except LookupError as e:
            skipped += 1
            scores.append((t1, t2, None, str(e)))
            continue
        scores.append((t1, t2, s, "ok"))
        human.append(h)
        system.append(s)
    rho = None
    if len(human) >= 4:
        try:
            rho = spearman(human, system)
        except ArithmeticError:
            rho = None
    return scores, len(human), skipped, rho


def fmt(v):
    return repr(float(v))


print("# Expected fixture outputs, computed by tests/oracles/fixture_oracle.py")
for c in concepts:
    print("\t".join(["ic", c, fmt(IC[c])]))

res_scores = scored(res)
path_scores = scored(path)
print("\t".join(["scored_pairs", "res", str(len(res_scores))]))
print("\t".join(["scored_pairs", "path", str(len(path_scores))]))
for (a, b), v in sorted(res_scores.items()):
    print("\t".join(["res_bigram", a, b, fmt(v)]))

for name, scores in (("res", res_scores), ("path", path_scores)):
    m0 = matrix_at(scores, 0.0)
    pair_scores, used, skipped, rho = evaluate(m0)
    for t1, t2, s, status in pair_scores:
        print("\t".join(["relate", "vector-" + name, t1, t2, status, fmt(s) if s is not None else "-"]))
    print("\t".join(["rho", "vector-" + name, str(used), str(skipped), fmt(rho) if rho is not None else "-"]))

counts = {k: float(v) for k, v in bigram_counts.items()}
pair_scores, used, skipped, rho = evaluate(counts)
for t1, t2, s, status in pair_scores:
    print("\t".join(["relate", "o2", t1, t2, status, fmt(s) if s is not None else "-"]))
print("\t".join(["rho", "o2", str(used), str(skipped), fmt(rho) if rho is not None else "-"]))
print("\t".join(["count_entries", str(len(counts)), str(int(sum(counts.values())))]))

for name, scores, thresholds in (("res", res_scores, [0, 0.25, 0.5, 1.0, 1.5, 2.0]),
                                 ("path", path_scores, [0, 0.25, 0.3, 0.4, 0.5, 0.9])):
    for t in thresholds:
        m = matrix_at(scores, t)
        _, used, skipped, rho = evaluate(m)
        print("\t".join(["sweep", name, fmt(t), str(len(m)), str(used), str(skipped),
                         fmt(rho) if rho is not None else "-"]))
