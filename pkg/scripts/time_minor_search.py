"""Wall time of the clique-minor search on the benchmark graphs used by the suites."""

import time

from dcminor.cockade import build_cockade, cockade_family
from dcminor.graph import complement, complete_multipartite, petersen
from dcminor.minors import has_kt_minor

CASES = [
    ("petersen, K6", petersen(), 6),
    ("complement of petersen, K7", complement(petersen()), 7),
    ("K22222, K8", complete_multipartite([2] * 5), 8),
    ("K122222, K9", complete_multipartite([1, 2, 2, 2, 2, 2]), 9),
    ("K22233, K9", complete_multipartite([2, 2, 2, 3, 3]), 9),
]


def main() -> None:
    fam = cockade_family(complete_multipartite([1, 2, 2, 2, 2, 2]), 6, 2)
    cases = CASES + [(f"K122222 cockade on {build_cockade(s).n}, K9", build_cockade(s), 9) for s in fam[-2:]]
    for name, g, t in cases:
        start = time.perf_counter()
        found = has_kt_minor(g, t) is not None
        print(f"{name:40s} {'yes' if found else 'no ':3s} {1000 * (time.perf_counter() - start):8.1f} ms")


if __name__ == "__main__":
    main()
