"""Jitted search kernels shared by the solver and the state wrappers.

All mutable search state lives in preallocated numpy arrays so a single
code path serves both full-speed runs and the step-at-a-time mode the
tests use to check invariants at every step boundary.

Integer discipline: state arrays are int64 (membership flags uint8); the
RNG is xoshiro256++ on uint64, seeded via splitmix64; modular hash sums
stay below 2^32 because primes are validated to fit in 31 bits.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# clique-state scalars
CS_SIZE, CS_WEIGHT, CS_IDXSUM, CS_STEP = 0, 1, 2, 3
NCSCAL = 4

# run statistics / solver scalars
(
    ST_BESTW,
    ST_BESTSTEP,
    ST_RESTARTS,
    ST_MARKS,
    ST_MARKHITS,
    ST_LSI,
    ST_RESTARTS_AT_BEST,
    ST_FIRSTV,
    ST_CONSTRUCTIONS,
) = range(9)
NSTATS = 9

# frozen run parameters
(
    P_N,
    P_M,
    P_P,
    P_ALGO,
    P_TABU,
    P_HASHMODE,
    P_RESTART,
    P_L,
    P_SWEEPLOCKS,
    P_MARKSTORE,
) = range(10)
NPRM = 10

ALGO_TRSC, ALGO_LSCC = 0, 1
TABU_FRU, TABU_SCC = 0, 1
HASH_SCENARIO, HASH_SOLUTION = 0, 1
RESTART_NONE, RESTART_SCENARIO, RESTART_PERIODIC = 0, 1, 2
MARK_BITSET, MARK_SPARSE = 0, 1

RC_MOVE, RC_RESTART, RC_MARKFULL = 0, 1, 2

_MASK64 = (1 << 64) - 1


def seed_rng(seed: int) -> np.ndarray:
    """Expand a 64-bit seed into xoshiro256++ state via splitmix64."""
    state = np.zeros(4, dtype=np.uint64)
    x = seed & _MASK64
    for i in range(4):
        x = (x + 0x9E3779B97F4A7C15) & _MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        state[i] = np.uint64(z ^ (z >> 31))
    if not state.any():
        state[0] = np.uint64(0x9E3779B97F4A7C15)
    return state


@njit(cache=True, nogil=True, inline="always")
def _rotl(x, k):
    return (x << k) | (x >> (np.uint64(64) - k))


@njit(cache=True, nogil=True)
def rng_next(rng):
    out = _rotl(rng[0] + rng[3], np.uint64(23)) + rng[0]
    t = rng[1] << np.uint64(17)
    rng[2] ^= rng[0]
    rng[3] ^= rng[1]
    rng[1] ^= rng[2]
    rng[0] ^= rng[3]
    rng[2] ^= t
    rng[3] = _rotl(rng[3], np.uint64(45))
    return out


@njit(cache=True, nogil=True)
def rng_below(rng, k):
    """Uniform draw from [0, k) via bitmask rejection (unbiased)."""
    if k <= 1:
        return 0
    mask = np.uint64(k - 1)
    mask |= mask >> np.uint64(1)
    mask |= mask >> np.uint64(2)
    mask |= mask >> np.uint64(4)
    mask |= mask >> np.uint64(8)
    mask |= mask >> np.uint64(16)
    mask |= mask >> np.uint64(32)
    bound = np.uint64(k)
    while True:
        r = rng_next(rng) & mask
        if r < bound:
            return np.int64(r)


# -- scenario hash deltas -------------------------------------------------


@njit(cache=True, nogil=True)
def hash_toggle_clique(hval, pow2, p, v, insert):
    if insert:
        hval[0] = (hval[0] + pow2[v]) % p
    else:
        hval[0] = (hval[0] + p - pow2[v]) % p


@njit(cache=True, nogil=True)
def hash_toggle_free(hval, pow2, p, hash_mode, n, v, insert):
    if hash_mode != HASH_SCENARIO:
        return
    if insert:
        hval[0] = (hval[0] + pow2[n + v]) % p
    else:
        hval[0] = (hval[0] + p - pow2[n + v]) % p


@njit(cache=True, nogil=True)
def hash_unlock_pair(hval, pow2, p, hash_mode, n, m, i, j, e, insert):
    # tuple (i, j) records unlocker(v_i) = v_j; the two orientations of an
    # edge occupy disjoint exponent ranges
    if hash_mode != HASH_SCENARIO:
        return
    if i < j:
        exp = 2 * n + 1 + e
    else:
        exp = 2 * n + m + 1 + e
    if insert:
        hval[0] = (hval[0] + pow2[exp]) % p
    else:
        hval[0] = (hval[0] + p - pow2[exp]) % p


# -- clique state ----------------------------------------------------------


@njit(cache=True, nogil=True)
def clique_add(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal, v):
    in_clique[v] = 1
    cscal[CS_SIZE] += 1
    cscal[CS_WEIGHT] += w[v]
    cscal[CS_IDXSUM] += v
    last_flip[v] = cscal[CS_STEP]
    for k in range(indptr[v], indptr[v + 1]):
        u = nbr[k]
        cnt_adj[u] += 1
        sum_adj[u] += v


@njit(cache=True, nogil=True)
def clique_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal, v):
    in_clique[v] = 0
    cscal[CS_SIZE] -= 1
    cscal[CS_WEIGHT] -= w[v]
    cscal[CS_IDXSUM] -= v
    last_flip[v] = cscal[CS_STEP]
    for k in range(indptr[v], indptr[v + 1]):
        u = nbr[k]
        cnt_adj[u] -= 1
        sum_adj[u] -= v


# -- tabu updates -----------------------------------------------------------


@njit(cache=True, nogil=True)
def fru_on_add(indptr, nbr, eid, free, unlocker, unlocker_eid,
               hval, pow2, p, hash_mode, n, m, v):
    """Add operator under forbidden-repeated-unlocking, hash kept in sync.

    A locked neighbor whose recorded unlocker is v again stays locked:
    the same neighbor may not unlock a vertex twice in a row.
    """
    hash_toggle_clique(hval, pow2, p, v, True)
    if free[v] == 0:
        free[v] = 1
        hash_toggle_free(hval, pow2, p, hash_mode, n, v, True)
    for k in range(indptr[v], indptr[v + 1]):
        x = nbr[k]
        if free[x] == 1 or unlocker[x] == v:
            continue
        if unlocker[x] != 0:
            hash_unlock_pair(hval, pow2, p, hash_mode, n, m,
                             x, unlocker[x], unlocker_eid[x], False)
        free[x] = 1
        unlocker[x] = v
        unlocker_eid[x] = eid[k]
        hash_unlock_pair(hval, pow2, p, hash_mode, n, m, x, v, eid[k], True)
        hash_toggle_free(hval, pow2, p, hash_mode, n, x, True)


@njit(cache=True, nogil=True)
def fru_on_remove(free, hval, pow2, p, hash_mode, n, v):
    # covers drop, swap-out and restart sweeps; unlocker(v) survives removal
    hash_toggle_clique(hval, pow2, p, v, False)
    free[v] = 0
    hash_toggle_free(hval, pow2, p, hash_mode, n, v, False)


@njit(cache=True, nogil=True)
def scc_on_add(indptr, nbr, conf, v):
    for k in range(indptr[v], indptr[v + 1]):
        conf[nbr[k]] = 1


@njit(cache=True, nogil=True)
def scc_on_lock(conf, v):
    # drop and swap-out behave identically: the leaving vertex is locked
    conf[v] = 0


# -- mark tables ------------------------------------------------------------


@njit(cache=True, nogil=True)
def mark_is_marked(store, bits, keys, h):
    if store == MARK_BITSET:
        return (bits[h >> 6] >> (h & 63)) & 1 == 1
    cap = keys.shape[0]
    key = h + 1
    i = h % cap
    while True:
        k = keys[i]
        if k == 0:
            return False
        if k == key:
            return True
        i += 1
        if i == cap:
            i = 0


@njit(cache=True, nogil=True)
def mark_set(store, bits, keys, meta, h):
    """Insert h. Returns 0 inserted, 1 inserted + table needs growing,
    2 already present."""
    if store == MARK_BITSET:
        word = bits[h >> 6]
        if (word >> (h & 63)) & 1 == 1:
            return 2
        bits[h >> 6] = word | (np.int64(1) << (h & 63))
        return 0
    cap = keys.shape[0]
    key = h + 1
    i = h % cap
    while True:
        k = keys[i]
        if k == key:
            return 2
        if k == 0:
            keys[i] = key
            meta[0] += 1
            break
        i += 1
        if i == cap:
            i = 0
    if meta[0] * 2 >= cap:
        return 1
    return 0


# -- move application -------------------------------------------------------


@njit(cache=True, nogil=True)
def _apply_add(indptr, nbr, eid, w, in_clique, cnt_adj, sum_adj, last_flip,
               cscal, free, unlocker, unlocker_eid, conf, hval, pow2, prm, v):
    clique_add(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal, v)
    if prm[P_TABU] == TABU_FRU:
        fru_on_add(indptr, nbr, eid, free, unlocker, unlocker_eid,
                   hval, pow2, prm[P_P], prm[P_HASHMODE], prm[P_N], prm[P_M], v)
    else:
        hash_toggle_clique(hval, pow2, prm[P_P], v, True)
        scc_on_add(indptr, nbr, conf, v)


@njit(cache=True, nogil=True)
def _apply_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip,
                cscal, free, conf, hval, pow2, prm, v):
    clique_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal, v)
    if prm[P_TABU] == TABU_FRU:
        fru_on_remove(free, hval, pow2, prm[P_P], prm[P_HASHMODE], prm[P_N], v)
    else:
        hash_toggle_clique(hval, pow2, prm[P_P], v, False)
        scc_on_lock(conf, v)


@njit(cache=True, nogil=True)
def _apply_swap(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip,
                cscal, free, conf, hval, pow2, prm, u, v):
    # the leaving vertex is locked exactly as a drop; the entering vertex
    # contributes only its membership bit: a swap never unlocks anything
    _apply_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip,
                cscal, free, conf, hval, pow2, prm, u)
    clique_add(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal, v)
    hash_toggle_clique(hval, pow2, prm[P_P], v, True)


@njit(cache=True, nogil=True)
def _sweep(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal,
           free, hval, pow2, prm, lock):
    # empty the clique, ascending order; hash stays synchronized either way
    n = prm[P_N]
    for x in range(1, n + 1):
        if in_clique[x] == 1:
            clique_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj,
                        last_flip, cscal, x)
            if lock == 1:
                fru_on_remove(free, hval, pow2, prm[P_P], prm[P_HASHMODE],
                              prm[P_N], x)
            else:
                hash_toggle_clique(hval, pow2, prm[P_P], x, False)


@njit(cache=True, nogil=True)
def _snapshot_best(in_clique, best_clique, cscal, stats):
    stats[ST_BESTW] = cscal[CS_WEIGHT]
    stats[ST_BESTSTEP] = cscal[CS_STEP]
    stats[ST_RESTARTS_AT_BEST] = stats[ST_RESTARTS]
    for x in range(best_clique.shape[0]):
        best_clique[x] = in_clique[x]


@njit(cache=True, nogil=True)
def local_move(indptr, nbr, eid, w,
               in_clique, cnt_adj, sum_adj, last_flip, cscal,
               free, unlocker, unlocker_eid, conf,
               hval, pow2, mark_bits, mark_keys, mark_meta,
               best_clique, rng, stats, prm):
    """One full search iteration: construct if empty, then pick and apply
    the best admissible add/swap/drop, handling marks and restarts."""
    n = prm[P_N]
    algo = prm[P_ALGO]
    tabu = prm[P_TABU]
    grow = 0

    if cscal[CS_SIZE] == 0:
        v0 = stats[ST_FIRSTV]
        if v0 != 0:
            stats[ST_FIRSTV] = 0
        else:
            v0 = 1 + rng_below(rng, n)
        _apply_add(indptr, nbr, eid, w, in_clique, cnt_adj, sum_adj, last_flip,
                   cscal, free, unlocker, unlocker_eid, conf, hval, pow2, prm, v0)
        if algo == ALGO_LSCC:
            cscal[CS_STEP] += 1
        while True:
            size = cscal[CS_SIZE]
            k = 0
            for x in range(1, n + 1):
                if in_clique[x] == 0 and cnt_adj[x] == size:
                    k += 1
            if k == 0:
                break
            r = rng_below(rng, k)
            pick = 0
            for x in range(1, n + 1):
                if in_clique[x] == 0 and cnt_adj[x] == size:
                    if r == 0:
                        pick = x
                        break
                    r -= 1
            _apply_add(indptr, nbr, eid, w, in_clique, cnt_adj, sum_adj,
                       last_flip, cscal, free, unlocker, unlocker_eid, conf,
                       hval, pow2, prm, pick)
            if algo == ALGO_LSCC:
                cscal[CS_STEP] += 1
        stats[ST_LSI] = 1
        stats[ST_CONSTRUCTIONS] += 1
        if cscal[CS_WEIGHT] > stats[ST_BESTW]:
            _snapshot_best(in_clique, best_clique, cscal, stats)

    size = cscal[CS_SIZE]

    # best admissible add: max gain, then oldest, then lowest index
    av = -1
    ad = np.int64(0)
    alf = np.int64(0)
    for x in range(1, n + 1):
        if in_clique[x] == 0 and cnt_adj[x] == size:
            if (tabu == TABU_FRU and free[x] == 1) or (tabu == TABU_SCC and conf[x] == 1):
                d = w[x]
                if av < 0 or d > ad or (d == ad and last_flip[x] < alf):
                    av = x
                    ad = d
                    alf = last_flip[x]

    # best admissible swap, keyed by the entering vertex; the unique
    # non-neighbor inside the clique is recovered from the index sums
    su = -1
    sv = -1
    sd = np.int64(0)
    slf = np.int64(0)
    if size > 1:
        for x in range(1, n + 1):
            if in_clique[x] == 0 and cnt_adj[x] == size - 1:
                if (tabu == TABU_FRU and free[x] == 1) or (tabu == TABU_SCC and conf[x] == 1):
                    u = cscal[CS_IDXSUM] - sum_adj[x]
                    d = w[x] - w[u]
                    if sv < 0 or d > sd or (d == sd and last_flip[x] < slf):
                        su = u
                        sv = x
                        sd = d
                        slf = last_flip[x]

    if algo == ALGO_TRSC:
        if av > 0:
            if sv < 0 or ad > sd:
                _apply_add(indptr, nbr, eid, w, in_clique, cnt_adj, sum_adj,
                           last_flip, cscal, free, unlocker, unlocker_eid,
                           conf, hval, pow2, prm, av)
            else:
                _apply_swap(indptr, nbr, w, in_clique, cnt_adj, sum_adj,
                            last_flip, cscal, free, conf, hval, pow2, prm, su, sv)
            stats[ST_LSI] = 1
        else:
            if sv < 0 or sd < 0:
                # local optimum of the admissible neighborhood
                if stats[ST_LSI] == 1:
                    h = hval[0]
                    if prm[P_RESTART] == RESTART_SCENARIO and mark_is_marked(
                            prm[P_MARKSTORE], mark_bits, mark_keys, h):
                        stats[ST_MARKHITS] += 1
                        _sweep(indptr, nbr, w, in_clique, cnt_adj, sum_adj,
                               last_flip, cscal, free, hval, pow2, prm,
                               prm[P_SWEEPLOCKS])
                        cscal[CS_STEP] += 1
                        stats[ST_RESTARTS] += 1
                        return RC_RESTART
                    rc = mark_set(prm[P_MARKSTORE], mark_bits, mark_keys,
                                  mark_meta, h)
                    if rc != 2:
                        stats[ST_MARKS] += 1
                    if rc == 1:
                        grow = 1
                stats[ST_LSI] = 0
            else:
                stats[ST_LSI] = 1
            # drop is never tabu-filtered
            dx = -1
            dd = np.int64(0)
            dlf = np.int64(0)
            for x in range(1, n + 1):
                if in_clique[x] == 1:
                    d = -w[x]
                    if dx < 0 or d > dd or (d == dd and last_flip[x] < dlf):
                        dx = x
                        dd = d
                        dlf = last_flip[x]
            if sv < 0 or dd > sd:
                _apply_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj,
                            last_flip, cscal, free, conf, hval, pow2, prm, dx)
            else:
                _apply_swap(indptr, nbr, w, in_clique, cnt_adj, sum_adj,
                            last_flip, cscal, free, conf, hval, pow2, prm, su, sv)
        cscal[CS_STEP] += 1
        if cscal[CS_WEIGHT] > stats[ST_BESTW]:
            _snapshot_best(in_clique, best_clique, cscal, stats)
        if grow == 1:
            return RC_MARKFULL
        return RC_MOVE

    # periodic-restart baseline: no improvement flag, no marking
    if av > 0:
        if sv < 0 or ad > sd:
            _apply_add(indptr, nbr, eid, w, in_clique, cnt_adj, sum_adj,
                       last_flip, cscal, free, unlocker, unlocker_eid, conf,
                       hval, pow2, prm, av)
        else:
            _apply_swap(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip,
                        cscal, free, conf, hval, pow2, prm, su, sv)
    else:
        dx = -1
        dd = np.int64(0)
        dlf = np.int64(0)
        for x in range(1, n + 1):
            if in_clique[x] == 1:
                d = -w[x]
                if dx < 0 or d > dd or (d == dd and last_flip[x] < dlf):
                    dx = x
                    dd = d
                    dlf = last_flip[x]
        if sv < 0 or dd > sd:
            _apply_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip,
                        cscal, free, conf, hval, pow2, prm, dx)
        else:
            _apply_swap(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip,
                        cscal, free, conf, hval, pow2, prm, su, sv)
    cscal[CS_STEP] += 1
    if cscal[CS_WEIGHT] > stats[ST_BESTW]:
        _snapshot_best(in_clique, best_clique, cscal, stats)
    if prm[P_RESTART] == RESTART_PERIODIC and cscal[CS_STEP] % prm[P_L] == 0:
        _sweep(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal,
               free, hval, pow2, prm, 0)
        stats[ST_RESTARTS] += 1
        return RC_RESTART
    return RC_MOVE


@njit(cache=True, nogil=True)
def run_steps(indptr, nbr, eid, w,
              in_clique, cnt_adj, sum_adj, last_flip, cscal,
              free, unlocker, unlocker_eid, conf,
              hval, pow2, mark_bits, mark_keys, mark_meta,
              best_clique, rng, stats, prm, stop_at):
    """Run whole local-move iterations until the step counter reaches
    stop_at, pausing early only when the sparse mark table must grow."""
    while cscal[CS_STEP] < stop_at:
        rc = local_move(indptr, nbr, eid, w,
                        in_clique, cnt_adj, sum_adj, last_flip, cscal,
                        free, unlocker, unlocker_eid, conf,
                        hval, pow2, mark_bits, mark_keys, mark_meta,
                        best_clique, rng, stats, prm)
        if rc == RC_MARKFULL:
            return RC_MARKFULL
    return RC_MOVE


@njit(cache=True)
def pow2_fill(arr, p):
    arr[0] = 1 % p
    for i in range(1, arr.shape[0]):
        arr[i] = (arr[i - 1] * 2) % p
