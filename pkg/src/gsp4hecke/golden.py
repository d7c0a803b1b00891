"""Reference data for the golden verification suite.

Spherical transforms are kept verbatim in brace-exponent form
(``p^{4} Y^{2} Z^{-4}``), which ``algebra.parse`` accepts directly.
Decomposition tables map ``(m, l)`` to the coefficient of ``tau(m, l)``.
"""

REFERENCE_TRANSFORMS: dict[str, str] = {
    "T2^2": (
        "p^{4} Y^{2} Z^{4} + 2 p^{4} Y^{2} Z^{2} + 2 p^{4} Y Z^{2} + p^{4} Y^{2} + 2 p^{4} "
        "Z^{2} + 2 p^{4} Y - 2 p^{2} Y Z^{2} + 5 p^{4} + 2 p^{4} Y^{-1} - 2 p^{2} Y + 2 p^{4} "
        "Z^{-2} + p^{4} Y^{-2} - 2 p^{2} + 2 p^{4} Y^{-1} Z^{-2} - 2 p^{2} Y^{-1} + 2 p^{4} "
        "Y^{-2} Z^{-2} + 1 - 2 p^{2} Y^{-1} Z^{-2} + p^{4} Y^{-2} Z^{-4}"
    ),
    "sigma": (
        "p^{4} Y^{2} Z^{4} + p^{4} Y^{2} Z^{2} - p^{3} Y^{2} Z^{2} + p^{4} Y^{2} + p^{4} "
        "Z^{2} - 2 p^{3} Y Z^{2} - p^{3} Z^{2} - 2 p^{2} Y Z^{2} + p^{4} - 2 p^{3} Y - 4 "
        "p^{3} - 2 p^{2} Y + p^{4} Z^{-2} + p^{4} Y^{-2} - 2 p^{3} Y^{-1} - 2 p^{2} - p^{3} "
        "Z^{-2} - 2 p^{2} Y^{-1} + p^{4} Y^{-2} Z^{-2} - 2 p^{3} Y^{-1} Z^{-2} + 1 - p^{3} "
        "Y^{-2} Z^{-2} - 2 p^{2} Y^{-1} Z^{-2} + p^{4} Y^{-2} Z^{-4}"
    ),
    "sigma^2": (
        "p^{8} Y^{4} Z^{8} + 2 p^{8} Y^{4} Z^{6} - 2 p^{7} Y^{4} Z^{6} + 3 p^{8} Y^{4} Z^{4} "
        "+ 2 p^{8} Y^{2} Z^{6} - 4 p^{7} Y^{3} Z^{6} - 2 p^{7} Y^{4} Z^{4} - 2 p^{7} Y^{2} "
        "Z^{6} - 4 p^{6} Y^{3} Z^{6} + 2 p^{8} Y^{4} Z^{2} + 4 p^{8} Y^{2} Z^{4} - 8 p^{7} "
        "Y^{3} Z^{4} + p^{6} Y^{4} Z^{4} - 2 p^{7} Y^{4} Z^{2} - 12 p^{7} Y^{2} Z^{4} - 4 "
        "p^{6} Y^{3} Z^{4} + p^{8} Y^{4} + 6 p^{8} Y^{2} Z^{2} - 8 p^{7} Y^{3} Z^{2} + 3 "
        "p^{8} Z^{4} - 8 p^{7} Y Z^{4} + 2 p^{6} Y^{2} Z^{4} + 4 p^{5} Y^{3} Z^{4} - 14 p^{7} "
        "Y^{2} Z^{2} - 4 p^{6} Y^{3} Z^{2} - 2 p^{7} Z^{4} - 4 p^{6} Y Z^{4} + 8 p^{5} Y^{2} "
        "Z^{4} + 4 p^{8} Y^{2} - 4 p^{7} Y^{3} + 6 p^{8} Z^{2} - 16 p^{7} Y Z^{2} + 12 p^{6} "
        "Y^{2} Z^{2} + 4 p^{5} Y^{3} Z^{2} + p^{6} Z^{4} + 4 p^{5} Y Z^{4} + 6 p^{4} Y^{2} "
        "Z^{4} - 12 p^{7} Y^{2} - 4 p^{6} Y^{3} - 14 p^{7} Z^{2} + 8 p^{6} Y Z^{2} + 20 p^{5} "
        "Y^{2} Z^{2} + 2 p^{8} Y^{2} Z^{-2} + 9 p^{8} - 16 p^{7} Y + 2 p^{6} Y^{2} + 2 p^{8} "
        "Y^{-2} Z^{2} - 8 p^{7} Y^{-1} Z^{2} + 12 p^{6} Z^{2} + 32 p^{5} Y Z^{2} + 10 p^{4} "
        "Y^{2} Z^{2} - 2 p^{7} Y^{2} Z^{-2} - 16 p^{7} + 8 p^{6} Y + 8 p^{5} Y^{2} - 2 p^{7} "
        "Y^{-2} Z^{2} - 4 p^{6} Y^{-1} Z^{2} + 20 p^{5} Z^{2} + 8 p^{4} Y Z^{2} - 2 p^{3} "
        "Y^{2} Z^{2} + 6 p^{8} Z^{-2} - 8 p^{7} Y Z^{-2} + 4 p^{8} Y^{-2} - 16 p^{7} Y^{-1} + "
        "32 p^{6} + 32 p^{5} Y + 6 p^{4} Y^{2} + 4 p^{5} Y^{-1} Z^{2} + 10 p^{4} Z^{2} - 4 "
        "p^{3} Y Z^{2} - 14 p^{7} Z^{-2} - 4 p^{6} Y Z^{-2} - 12 p^{7} Y^{-2} + 8 p^{6} "
        "Y^{-1} + 48 p^{5} + 8 p^{4} Y - 2 p^{3} Z^{2} - 4 p^{2} Y Z^{2} + 3 p^{8} Z^{-4} + 6 "
        "p^{8} Y^{-2} Z^{-2} - 16 p^{7} Y^{-1} Z^{-2} + 12 p^{6} Z^{-2} + 4 p^{5} Y Z^{-2} + "
        "p^{8} Y^{-4} - 4 p^{7} Y^{-3} + 2 p^{6} Y^{-2} + 32 p^{5} Y^{-1} + 22 p^{4} - 4 "
        "p^{3} Y - 2 p^{7} Z^{-4} - 14 p^{7} Y^{-2} Z^{-2} + 8 p^{6} Y^{-1} Z^{-2} + 20 p^{5} "
        "Z^{-2} - 4 p^{6} Y^{-3} + 8 p^{5} Y^{-2} + 8 p^{4} Y^{-1} - 8 p^{3} - 4 p^{2} Y + 4 "
        "p^{8} Y^{-2} Z^{-4} - 8 p^{7} Y^{-1} Z^{-4} + p^{6} Z^{-4} + 2 p^{8} Y^{-4} Z^{-2} - "
        "8 p^{7} Y^{-3} Z^{-2} + 12 p^{6} Y^{-2} Z^{-2} + 32 p^{5} Y^{-1} Z^{-2} + 10 p^{4} "
        "Z^{-2} + 6 p^{4} Y^{-2} - 4 p^{3} Y^{-1} - 4 p^{2} - 12 p^{7} Y^{-2} Z^{-4} - 4 "
        "p^{6} Y^{-1} Z^{-4} - 2 p^{7} Y^{-4} Z^{-2} - 4 p^{6} Y^{-3} Z^{-2} + 20 p^{5} "
        "Y^{-2} Z^{-2} + 8 p^{4} Y^{-1} Z^{-2} - 2 p^{3} Z^{-2} - 4 p^{2} Y^{-1} + 2 p^{8} "
        "Y^{-2} Z^{-6} + 3 p^{8} Y^{-4} Z^{-4} - 8 p^{7} Y^{-3} Z^{-4} + 2 p^{6} Y^{-2} "
        "Z^{-4} + 4 p^{5} Y^{-1} Z^{-4} + 4 p^{5} Y^{-3} Z^{-2} + 10 p^{4} Y^{-2} Z^{-2} - 4 "
        "p^{3} Y^{-1} Z^{-2} + 1 - 2 p^{7} Y^{-2} Z^{-6} - 2 p^{7} Y^{-4} Z^{-4} - 4 p^{6} "
        "Y^{-3} Z^{-4} + 8 p^{5} Y^{-2} Z^{-4} - 2 p^{3} Y^{-2} Z^{-2} - 4 p^{2} Y^{-1} "
        "Z^{-2} + 2 p^{8} Y^{-4} Z^{-6} - 4 p^{7} Y^{-3} Z^{-6} + p^{6} Y^{-4} Z^{-4} + 4 "
        "p^{5} Y^{-3} Z^{-4} + 6 p^{4} Y^{-2} Z^{-4} - 2 p^{7} Y^{-4} Z^{-6} - 4 p^{6} Y^{-3} "
        "Z^{-6} + p^{8} Y^{-4} Z^{-8}"
    ),
    "tau(0,0)": (
        "1"
    ),
    "tau(1,2)": (
        "p^{2} Y Z^{2} + p^{2} Y + p^{2} + p^{2} Y^{-1} - 1 + p^{2} Y^{-1} Z^{-2}"
    ),
    "tau(0,2)": (
        "p^{3} Y^{2} Z^{2} + p^{3} Y Z^{2} + p^{3} Z^{2} - p^{2} Y Z^{2} + p^{3} Y + 2 p^{3} "
        "- p^{2} Y + p^{3} Y^{-1} - 2 p^{2} + p^{3} Z^{-2} - p^{2} Y^{-1} + p^{3} Y^{-1} "
        "Z^{-2} + p^{3} Y^{-2} Z^{-2} - p^{2} Y^{-1} Z^{-2}"
    ),
    "tau(0,4)": (
        "p^{6} Y^{4} Z^{4} + p^{6} Y^{3} Z^{4} + p^{6} Y^{2} Z^{4} - p^{5} Y^{3} Z^{4} + "
        "p^{6} Y^{3} Z^{2} + p^{6} Y Z^{4} - p^{5} Y^{2} Z^{4} + 2 p^{6} Y^{2} Z^{2} - p^{5} "
        "Y^{3} Z^{2} + p^{6} Z^{4} - p^{5} Y Z^{4} + 2 p^{6} Y Z^{2} - 3 p^{5} Y^{2} Z^{2} + "
        "p^{6} Y^{2} + 2 p^{6} Z^{2} - 4 p^{5} Y Z^{2} + p^{4} Y^{2} Z^{2} + 2 p^{6} Y - "
        "p^{5} Y^{2} + p^{6} Y^{-1} Z^{2} - 3 p^{5} Z^{2} + 2 p^{4} Y Z^{2} + 3 p^{6} - 4 "
        "p^{5} Y - p^{5} Y^{-1} Z^{2} + p^{4} Z^{2} + p^{6} Y Z^{-2} + 2 p^{6} Y^{-1} - 5 "
        "p^{5} + 2 p^{4} Y + 2 p^{6} Z^{-2} - p^{5} Y Z^{-2} + p^{6} Y^{-2} - 4 p^{5} Y^{-1} "
        "+ 3 p^{4} + 2 p^{6} Y^{-1} Z^{-2} - 3 p^{5} Z^{-2} - p^{5} Y^{-2} + 2 p^{4} Y^{-1} - "
        "p^{3} + p^{6} Z^{-4} + 2 p^{6} Y^{-2} Z^{-2} - 4 p^{5} Y^{-1} Z^{-2} + p^{4} Z^{-2} "
        "+ p^{6} Y^{-1} Z^{-4} + p^{6} Y^{-3} Z^{-2} - 3 p^{5} Y^{-2} Z^{-2} + 2 p^{4} Y^{-1} "
        "Z^{-2} + p^{6} Y^{-2} Z^{-4} - p^{5} Y^{-1} Z^{-4} - p^{5} Y^{-3} Z^{-2} + p^{4} "
        "Y^{-2} Z^{-2} + p^{6} Y^{-3} Z^{-4} - p^{5} Y^{-2} Z^{-4} + p^{6} Y^{-4} Z^{-4} - "
        "p^{5} Y^{-3} Z^{-4}"
    ),
    "tau(1,4)": (
        "p^{5} Y^{3} Z^{4} + p^{5} Y^{2} Z^{4} + p^{5} Y^{3} Z^{2} + p^{5} Y Z^{4} - p^{4} "
        "Y^{2} Z^{4} + 2 p^{5} Y^{2} Z^{2} + 3 p^{5} Y Z^{2} - 2 p^{4} Y^{2} Z^{2} + p^{5} "
        "Y^{2} + 2 p^{5} Z^{2} - 3 p^{4} Y Z^{2} + 3 p^{5} Y - p^{4} Y^{2} + p^{5} Y^{-1} "
        "Z^{2} - 2 p^{4} Z^{2} + 3 p^{5} - 3 p^{4} Y + p^{5} Y Z^{-2} + 3 p^{5} Y^{-1} - 5 "
        "p^{4} + 2 p^{5} Z^{-2} + p^{5} Y^{-2} - 3 p^{4} Y^{-1} + p^{3} + 3 p^{5} Y^{-1} "
        "Z^{-2} - 2 p^{4} Z^{-2} - p^{4} Y^{-2} + p^{2} + 2 p^{5} Y^{-2} Z^{-2} - 3 p^{4} "
        "Y^{-1} Z^{-2} + p^{5} Y^{-1} Z^{-4} + p^{5} Y^{-3} Z^{-2} - 2 p^{4} Y^{-2} Z^{-2} + "
        "p^{5} Y^{-2} Z^{-4} + p^{5} Y^{-3} Z^{-4} - p^{4} Y^{-2} Z^{-4}"
    ),
    "tau(2,4)": (
        "p^{4} Y^{2} Z^{4} + p^{4} Y^{2} Z^{2} + p^{4} Y Z^{2} - p^{3} Y^{2} Z^{2} + p^{4} "
        "Y^{2} + p^{4} Z^{2} - p^{3} Y Z^{2} + p^{4} Y - p^{3} Z^{2} + 2 p^{4} - p^{3} Y + "
        "p^{4} Y^{-1} - 2 p^{3} + p^{4} Z^{-2} + p^{4} Y^{-2} - p^{3} Y^{-1} + p^{4} Y^{-1} "
        "Z^{-2} - p^{3} Z^{-2} + p^{4} Y^{-2} Z^{-2} - p^{3} Y^{-1} Z^{-2} - p^{3} Y^{-2} "
        "Z^{-2} + p^{4} Y^{-2} Z^{-4}"
    ),
    "tau(2,6)": (
        "p^{7} Y^{4} Z^{6} + p^{7} Y^{3} Z^{6} + p^{7} Y^{4} Z^{4} + p^{7} Y^{2} Z^{6} - "
        "p^{6} Y^{3} Z^{6} + 2 p^{7} Y^{3} Z^{4} - p^{6} Y^{4} Z^{4} + p^{7} Y^{4} Z^{2} + 3 "
        "p^{7} Y^{2} Z^{4} - 3 p^{6} Y^{3} Z^{4} + 2 p^{7} Y^{3} Z^{2} + 2 p^{7} Y Z^{4} - 4 "
        "p^{6} Y^{2} Z^{4} + p^{5} Y^{3} Z^{4} + 4 p^{7} Y^{2} Z^{2} - 3 p^{6} Y^{3} Z^{2} + "
        "p^{7} Z^{4} - 3 p^{6} Y Z^{4} + p^{5} Y^{2} Z^{4} + p^{7} Y^{3} + 4 p^{7} Y Z^{2} - "
        "6 p^{6} Y^{2} Z^{2} + p^{5} Y^{3} Z^{2} - p^{6} Z^{4} + p^{5} Y Z^{4} + 3 p^{7} "
        "Y^{2} - p^{6} Y^{3} + 4 p^{7} Z^{2} - 8 p^{6} Y Z^{2} + 3 p^{5} Y^{2} Z^{2} + 4 "
        "p^{7} Y - 4 p^{6} Y^{2} + 2 p^{7} Y^{-1} Z^{2} - 6 p^{6} Z^{2} + 5 p^{5} Y Z^{2} - "
        "p^{4} Y^{2} Z^{2} + p^{7} Y^{2} Z^{-2} + 5 p^{7} - 8 p^{6} Y + p^{5} Y^{2} + p^{7} "
        "Y^{-2} Z^{2} - 3 p^{6} Y^{-1} Z^{2} + 3 p^{5} Z^{2} - p^{4} Y Z^{2} + 2 p^{7} Y "
        "Z^{-2} + 4 p^{7} Y^{-1} - 10 p^{6} + 5 p^{5} Y + p^{5} Y^{-1} Z^{2} - p^{4} Z^{2} + "
        "4 p^{7} Z^{-2} - 3 p^{6} Y Z^{-2} + 3 p^{7} Y^{-2} - 8 p^{6} Y^{-1} + 6 p^{5} - "
        "p^{4} Y + 4 p^{7} Y^{-1} Z^{-2} - 6 p^{6} Z^{-2} + p^{5} Y Z^{-2} + p^{7} Y^{-3} - 4 "
        "p^{6} Y^{-2} + 5 p^{5} Y^{-1} - 2 p^{4} + p^{7} Z^{-4} + 4 p^{7} Y^{-2} Z^{-2} - 8 "
        "p^{6} Y^{-1} Z^{-2} + 3 p^{5} Z^{-2} - p^{6} Y^{-3} + p^{5} Y^{-2} - p^{4} Y^{-1} + "
        "p^{3} + 2 p^{7} Y^{-1} Z^{-4} - p^{6} Z^{-4} + 2 p^{7} Y^{-3} Z^{-2} - 6 p^{6} "
        "Y^{-2} Z^{-2} + 5 p^{5} Y^{-1} Z^{-2} - p^{4} Z^{-2} + 3 p^{7} Y^{-2} Z^{-4} - 3 "
        "p^{6} Y^{-1} Z^{-4} + p^{7} Y^{-4} Z^{-2} - 3 p^{6} Y^{-3} Z^{-2} + 3 p^{5} Y^{-2} "
        "Z^{-2} - p^{4} Y^{-1} Z^{-2} + 2 p^{7} Y^{-3} Z^{-4} - 4 p^{6} Y^{-2} Z^{-4} + p^{5} "
        "Y^{-1} Z^{-4} + p^{5} Y^{-3} Z^{-2} - p^{4} Y^{-2} Z^{-2} + p^{7} Y^{-2} Z^{-6} + "
        "p^{7} Y^{-4} Z^{-4} - 3 p^{6} Y^{-3} Z^{-4} + p^{5} Y^{-2} Z^{-4} + p^{7} Y^{-3} "
        "Z^{-6} - p^{6} Y^{-4} Z^{-4} + p^{5} Y^{-3} Z^{-4} + p^{7} Y^{-4} Z^{-6} - p^{6} "
        "Y^{-3} Z^{-6}"
    ),
    "tau(3,6)": (
        "p^{6} Y^{3} Z^{6} + p^{6} Y^{3} Z^{4} + p^{6} Y^{2} Z^{4} - p^{5} Y^{3} Z^{4} + "
        "p^{6} Y^{3} Z^{2} + p^{6} Y Z^{4} - p^{5} Y^{2} Z^{4} + p^{6} Y^{2} Z^{2} - p^{5} "
        "Y^{3} Z^{2} - p^{5} Y Z^{4} + p^{6} Y^{3} + 2 p^{6} Y Z^{2} - 2 p^{5} Y^{2} Z^{2} + "
        "p^{6} Y^{2} + p^{6} Z^{2} - 3 p^{5} Y Z^{2} + p^{4} Y^{2} Z^{2} + 2 p^{6} Y - p^{5} "
        "Y^{2} + p^{6} Y^{-1} Z^{2} - 2 p^{5} Z^{2} + p^{4} Y Z^{2} + 2 p^{6} - 3 p^{5} Y - "
        "p^{5} Y^{-1} Z^{2} + p^{4} Z^{2} + p^{6} Y Z^{-2} + 2 p^{6} Y^{-1} - 3 p^{5} + p^{4} "
        "Y + p^{6} Z^{-2} - p^{5} Y Z^{-2} + p^{6} Y^{-2} - 3 p^{5} Y^{-1} + 2 p^{4} + 2 "
        "p^{6} Y^{-1} Z^{-2} - 2 p^{5} Z^{-2} + p^{6} Y^{-3} - p^{5} Y^{-2} + p^{4} Y^{-1} - "
        "p^{3} + p^{6} Y^{-2} Z^{-2} - 3 p^{5} Y^{-1} Z^{-2} + p^{4} Z^{-2} + p^{6} Y^{-1} "
        "Z^{-4} + p^{6} Y^{-3} Z^{-2} - 2 p^{5} Y^{-2} Z^{-2} + p^{4} Y^{-1} Z^{-2} + p^{6} "
        "Y^{-2} Z^{-4} - p^{5} Y^{-1} Z^{-4} - p^{5} Y^{-3} Z^{-2} + p^{4} Y^{-2} Z^{-2} + "
        "p^{6} Y^{-3} Z^{-4} - p^{5} Y^{-2} Z^{-4} - p^{5} Y^{-3} Z^{-4} + p^{6} Y^{-3} "
        "Z^{-6}"
    ),
    "tau(4,8)": (
        "p^{8} Y^{4} Z^{8} + p^{8} Y^{4} Z^{6} + p^{8} Y^{3} Z^{6} - p^{7} Y^{4} Z^{6} + "
        "p^{8} Y^{4} Z^{4} + p^{8} Y^{2} Z^{6} - p^{7} Y^{3} Z^{6} + p^{8} Y^{3} Z^{4} - "
        "p^{7} Y^{4} Z^{4} - p^{7} Y^{2} Z^{6} + p^{8} Y^{4} Z^{2} + 2 p^{8} Y^{2} Z^{4} - 2 "
        "p^{7} Y^{3} Z^{4} + p^{8} Y^{3} Z^{2} - p^{7} Y^{4} Z^{2} + p^{8} Y Z^{4} - 3 p^{7} "
        "Y^{2} Z^{4} + p^{6} Y^{3} Z^{4} + p^{8} Y^{4} + 2 p^{8} Y^{2} Z^{2} - 2 p^{7} Y^{3} "
        "Z^{2} + p^{8} Z^{4} - 2 p^{7} Y Z^{4} + p^{6} Y^{2} Z^{4} + p^{8} Y^{3} + 2 p^{8} Y "
        "Z^{2} - 4 p^{7} Y^{2} Z^{2} + p^{6} Y^{3} Z^{2} - p^{7} Z^{4} + p^{6} Y Z^{4} + 2 "
        "p^{8} Y^{2} - p^{7} Y^{3} + 2 p^{8} Z^{2} - 4 p^{7} Y Z^{2} + 2 p^{6} Y^{2} Z^{2} + "
        "2 p^{8} Y - 3 p^{7} Y^{2} + p^{8} Y^{-1} Z^{2} - 4 p^{7} Z^{2} + 3 p^{6} Y Z^{2} + "
        "p^{8} Y^{2} Z^{-2} + 3 p^{8} - 4 p^{7} Y + p^{6} Y^{2} + p^{8} Y^{-2} Z^{2} - 2 "
        "p^{7} Y^{-1} Z^{2} + 2 p^{6} Z^{2} - p^{5} Y Z^{2} + p^{8} Y Z^{-2} - p^{7} Y^{2} "
        "Z^{-2} + 2 p^{8} Y^{-1} - 5 p^{7} + 3 p^{6} Y - p^{7} Y^{-2} Z^{2} + p^{6} Y^{-1} "
        "Z^{2} + 2 p^{8} Z^{-2} - 2 p^{7} Y Z^{-2} + 2 p^{8} Y^{-2} - 4 p^{7} Y^{-1} + 3 "
        "p^{6} - p^{5} Y + 2 p^{8} Y^{-1} Z^{-2} - 4 p^{7} Z^{-2} + p^{6} Y Z^{-2} + p^{8} "
        "Y^{-3} - 3 p^{7} Y^{-2} + 3 p^{6} Y^{-1} - p^{5} + p^{8} Z^{-4} + 2 p^{8} Y^{-2} "
        "Z^{-2} - 4 p^{7} Y^{-1} Z^{-2} + 2 p^{6} Z^{-2} + p^{8} Y^{-4} - p^{7} Y^{-3} + "
        "p^{6} Y^{-2} - p^{5} Y^{-1} + p^{8} Y^{-1} Z^{-4} - p^{7} Z^{-4} + p^{8} Y^{-3} "
        "Z^{-2} - 4 p^{7} Y^{-2} Z^{-2} + 3 p^{6} Y^{-1} Z^{-2} + 2 p^{8} Y^{-2} Z^{-4} - 2 "
        "p^{7} Y^{-1} Z^{-4} + p^{8} Y^{-4} Z^{-2} - 2 p^{7} Y^{-3} Z^{-2} + 2 p^{6} Y^{-2} "
        "Z^{-2} - p^{5} Y^{-1} Z^{-2} + p^{8} Y^{-3} Z^{-4} - 3 p^{7} Y^{-2} Z^{-4} + p^{6} "
        "Y^{-1} Z^{-4} - p^{7} Y^{-4} Z^{-2} + p^{6} Y^{-3} Z^{-2} + p^{8} Y^{-2} Z^{-6} + "
        "p^{8} Y^{-4} Z^{-4} - 2 p^{7} Y^{-3} Z^{-4} + p^{6} Y^{-2} Z^{-4} + p^{8} Y^{-3} "
        "Z^{-6} - p^{7} Y^{-2} Z^{-6} - p^{7} Y^{-4} Z^{-4} + p^{6} Y^{-3} Z^{-4} + p^{8} "
        "Y^{-4} Z^{-6} - p^{7} Y^{-3} Z^{-6} - p^{7} Y^{-4} Z^{-6} + p^{8} Y^{-4} Z^{-8}"
    ),
}

REFERENCE_DECOMPOSITIONS: dict[str, dict[tuple[int, int], str]] = {
    "T2^2": {
        (0, 0): "p^4+p^3+p^2+p",
        (0, 2): "p+1",
        (1, 2): "p-1",
        (2, 4): "1",
    },
    "sigma": {
        (0, 0): "-p^3-p^2-p-1",
        (1, 2): "-p^2-p-2",
        (2, 4): "1",
    },
    "sigma^2": {
        (0, 0): "2*p^8+4*p^7+10*p^6+15*p^5+18*p^4+17*p^3+11*p^2+6*p+1",
        (0, 2): "2*p^5+3*p^4+6*p^3+9*p^2+8*p+4",
        (1, 2): "-2*p^6+2*p^5+11*p^3+7*p^2+6*p",
        (0, 4): "p^2+p",
        (1, 4): "-2*p^3-2*p^2-4*p",
        (2, 4): "2*p^4-3*p^3+3*p^2+6",
        (2, 6): "p-1",
        (3, 6): "-2*p^2-p-5",
        (4, 8): "1",
    },
}

# leading p-degree of the H-restricted L1 bound; None marks a vanishing bound
REFERENCE_NORM_DEGREES: dict[str, int | None] = {
    "T2": None,
    "T2^2": 5,
    "sigma": 3,
    "sigma^2": 10,
}
