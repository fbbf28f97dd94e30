"""Helpers for cyclic sequences of comparable items."""

__all__ = ["least_rotation_index", "least_rotation"]


def least_rotation_index(seq) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm).

    Runs in O(n); items only need to support == and <.
    """
    n = len(seq)
    if n == 0:
        return 0
    s = tuple(seq) + tuple(seq)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def least_rotation(seq) -> tuple:
    """The lexicographically least rotation of seq, as a tuple."""
    seq = tuple(seq)
    i = least_rotation_index(seq)
    return seq[i:] + seq[:i]
