"""Shared helpers for the format and acceptance tests."""


def same_module(A, B):
    return (A.ring.carrier == B.ring.carrier and A.ring.h.table == B.ring.h.table
            and A.ring.k.table == B.ring.k.table and A.ring.zero == B.ring.zero
            and A.ring.one == B.ring.one and A.carrier == B.carrier
            and A.f.table == B.f.table and A.g_table == B.g_table and A.zero == B.zero)


MUTATION_TOKENS = ["{", "}", "=", "#", "[ring]", "[module]", "h", "k", "f", "g", "m", "n",
                   "0", "1", "2", "zero", "one", "elements", "\n", " ", "99", "-1", "é"]


def mutate(text, rng):
    lines = text.splitlines()
    for _ in range(rng.randint(1, 3)):
        op = rng.randrange(6)
        if not lines:
            lines = [""]
        i = rng.randrange(len(lines))
        if op == 0:
            del lines[i]
        elif op == 1:
            lines.insert(i, lines[rng.randrange(len(lines))])
        elif op == 2:
            j = rng.randrange(len(lines))
            lines[i], lines[j] = lines[j], lines[i]
        elif op == 3 and lines[i]:
            c = rng.randrange(len(lines[i]))
            lines[i] = lines[i][:c] + lines[i][c + 1:]
        elif op == 4:
            c = rng.randrange(len(lines[i]) + 1)
            lines[i] = lines[i][:c] + rng.choice(MUTATION_TOKENS) + lines[i][c:]
        else:
            toks = lines[i].split(" ")
            toks[rng.randrange(len(toks))] = rng.choice(MUTATION_TOKENS)
            lines[i] = " ".join(toks)
    return "\n".join(lines)
