"""Closed-form trigonometric quotients for the fitted b-weights.

Each b_j of PF-D<i> is an exact quotient num_j(v) / den(v) of trigonometric
polynomials, tabulated here verbatim.  Every numerator of a family carries an
explicit common prefactor (a rational constant times powers of v, sin(v/2)
and cos(v/2)); we store the prefactor separately from the residual "core"
expression and cancel it against the denominator analytically, which lowers
the v->0 vanishing order of the quotient (and with it the precision needed to
evaluate through the cancellation).

For PF-D5 the b_4 and b_5 quotients are not tabulated (the source material
for this family is incomplete); `coefficients` falls back to the defining
linear conditions (`_fitting`) for those two components.  Every expression
below is cross-validated against the same defining conditions in
tests/test_coefficients.py; a handful of obviously corrupted groupings in the
source were repaired there and re-verified to ~10^-60 relative.

Naming inside the core functions mirrors the tabulated text:
    c(k) = cos(k v),  ch(k) = cos(k v / 2),  s(k) = sin(k v),
    sh(k) = sin(k v / 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F


@dataclass(frozen=True)
class TrigPrefactor:
    """const * v^v_pow * sin(v/2)^sinh_pow * cos(v/2)^cosh_pow."""

    const: F
    v_pow: int
    sinh_pow: int
    cosh_pow: int

    @property
    def vanish_order(self) -> int:
        # order of the v->0 zero (cos factors do not vanish there)
        return self.v_pow + self.sinh_pow


# ----------------------------------------------------------------- PF-D0 ---

def _d0_b1(v, c, ch, s, sh):
    v2 = v * v
    return (((18392342566 * c(1) - 11352051608 * c(2) + 4958070583 * c(3)
              - 1405810666 * c(4) + 234300323 * c(5)) * v2) / 7257600
            - 5373508799 * v2 / 3628800
            - 2 * c(4) + 4 * c(5) - 4 * c(6) + 2 * c(7))


def _d0_b2(v, c, ch, s, sh):
    v2 = v * v
    return (-((35142254976 * c(1) - 20245959411 * c(2) + 7950775936 * c(3)
               - 1405906674 * c(4) + 234300323 * c(6)) * v2) / 7257600
            + 138116413 * v2 / 48384
            + 24 * c(4) - 48 * c(5) + 48 * c(6) - 24 * c(7))


def _d0_b3(v, c, ch, s, sh):
    v2 = v * v
    return (((50246280942 * c(1) - 26679563229 * c(2) + 8977155979 * c(3)
              - 702953337 * c(5) + 702905333 * c(6)) * v2) / 3628800
            - 415407179 * v2 / 50400
            - 132 * c(4) + 264 * c(5) - 264 * c(6) + 132 * c(7))


def _d0_b4(v, c, ch, s, sh):
    v2 = v * v
    return (-((119523462784 * c(1) - 43206415175 * c(2) + 17954311958 * c(4)
               - 7950775936 * c(5) + 4958070583 * c(6)) * v2) / 7257600
            + 36857631107 * v2 / 3628800
            + 440 * c(4) - 880 * c(5) + 880 * c(6) - 440 * c(7))


def _d0_b5(v, c, ch, s, sh):
    v2 = v * v
    return (((113384696634 * c(1) - 43206415175 * c(3) + 53359126458 * c(4)
              - 20245959411 * c(5) + 11352051608 * c(6)) * v2) / 7257600
            - 12520978019 * v2 / 1209600
            - 990 * c(4) + 1980 * c(5) - 1980 * c(6) + 990 * c(7))


def _d0_b6(v, c, ch, s, sh):
    v2 = v * v
    return (-((56692348317 * c(2) - 59761731392 * c(3) + 50246280942 * c(4)
               - 17571127488 * c(5) + 9196171283 * c(6)) * v2) / 3628800
            + 1197972677 * v2 / 604800
            + 1584 * c(4) - 3168 * c(5) + 3168 * c(6) - 1584 * c(7))


def _d0_b7(v, c, ch, s, sh):
    v2 = v * v
    return ((v2 * (-7187836062 * c(1) + 37562934057 * c(2) - 36857631107 * c(3)
                   + 29909316888 * c(4) - 10358730975 * c(5) + 5373508799 * c(6))) / 1814400
            - 1848 * (c(4) - 2 * c(5) + 2 * c(6) - c(7)))


# ----------------------------------------------------------------- PF-D1 ---

def _d1_b1(v, c, ch, s, sh):
    v2 = v * v
    return (29030400 * (2 * c(1) + 2 * c(2) + 2 * c(3) + 2 * c(4) + 2 * c(6) + 1) * sh(1) ** 3
            + v * (3628800 * (9 * ch(7) - 19 * ch(9) + 2 * (11 * ch(11) - 7 * ch(13) + ch(15)))
                   - 11 * v2 * (65542714 * ch(1) - 133977068 * ch(3) + 127463860 * ch(5)
                                - 62185337 * ch(7) + 21299831 * ch(9))))


def _d1_b2(v, c, ch, s, sh):
    v2 = v * v
    return (v * (11 * v2 * (57295722 * ch(1) - 50530458 * ch(3) + 72737235 * ch(5)
                            + 6776053 * ch(7) + 1285617 * ch(9) + 21299831 * ch(11))
                 - 1814400 * (10 * ch(5) + 68 * ch(7) - 156 * ch(9) + 187 * ch(11)
                              - 119 * ch(13) + 9 * ch(15) + ch(17)))
            - 29030400 * (12 * c(1) + 12 * c(2) + 12 * c(3) + 11 * c(4) + 2 * c(5)
                          + 10 * c(6) + c(7) + 6) * sh(1) ** 3)


def _d1_b3(v, c, ch, s, sh):
    v2 = v * v
    return (58060800 * (66 * c(1) + 66 * c(2) + 66 * c(3) + 56 * c(4) + 20 * c(5)
                        + 46 * c(6) + 10 * c(7) + 33) * sh(1) ** 3
            + v * (7257600 * (50 * ch(5) + 97 * ch(7) - 267 * ch(9) + 341 * ch(11)
                              - 217 * ch(13) - 9 * ch(15) + 5 * ch(17))
                   - 11 * v2 * (418185576 * ch(1) - 101897295 * ch(3) + 429149785 * ch(5)
                                + 213355284 * ch(7) + 25712340 * ch(9)
                                + 21299831 * (9 * ch(11) + ch(13)))))


def _d1_b4(v, c, ch, s, sh):
    v2 = v * v
    return (v * (11 * v2 * (469639178 * ch(1) + 311586932 * ch(3) + 333470325 * ch(5)
                            + 480049389 * ch(7) + 77311321 * ch(9) + 260311901 * ch(11)
                            + 63470954 * ch(13))
                 - 9072000 * (90 * ch(5) + 36 * ch(7) - 188 * ch(9) + 275 * ch(11)
                              - 175 * ch(13) - 47 * ch(15) + 9 * ch(17)))
            - 145152000 * (44 * c(1) + 44 * c(2) + 44 * c(3) + 35 * c(4) + 18 * c(5)
                           + 26 * c(6) + 9 * c(7) + 22) * sh(1) ** 3)


def _d1_b5(v, c, ch, s, sh):
    v2 = v * v
    return (435456000 * (66 * c(1) + 66 * c(2) + 66 * c(3) + 50 * c(4) + 32 * c(5)
                         + 34 * c(6) + 16 * c(7) + 33) * sh(1) ** 3
            + v * (54432000 * (80 * ch(5) - 23 * ch(7) - 51 * ch(9) + 110 * ch(11)
                               - 70 * ch(13) - 54 * ch(15) + 8 * ch(17))
                   - 11 * v2 * (2105070006 * ch(1) + 1324106064 * ch(3) + 1778508400 * ch(5)
                                + 1717441153 * ch(7) + 754192017 * ch(9) + 920962652 * ch(11)
                                + 380999708 * ch(13))))


def _d1_b6(v, c, ch, s, sh):
    v2 = v * v
    return (v * (11 * v2 * (809642310 * ch(1) + 579296403 * ch(3) + 714780380 * ch(5)
                            + 616166543 * ch(7) + 386753499 * ch(9) + 310811926 * ch(11)
                            + 175060939 * ch(13))
                 - 5443200 * (350 * ch(5) - 212 * ch(7) + 12 * ch(9) + 209 * ch(11)
                              - 133 * ch(13) - 261 * ch(15) + 35 * ch(17)))
            - 87091200 * (132 * c(1) + 132 * c(2) + 132 * c(3) + 97 * c(4) + 70 * c(5)
                          + 62 * c(6) + 35 * c(7) + 66) * sh(1) ** 3)


def _d1_b7(v, c, ch, s, sh):
    v2 = v * v
    return (v * (11 * v2 * (1943141544 * ch(1) + 1212190059 * ch(3) + 1835374595 * ch(5)
                            + 1290288356 * ch(7) + 1000981284 * ch(9) + 673851637 * ch(11)
                            + 426700525 * ch(13))
                 - 152409600 * (30 * ch(5) - 21 * ch(7) + 7 * ch(9) + 11 * ch(11)
                                - 7 * ch(13) - 23 * ch(15) + 3 * ch(17)))
            + 304819200 * (3 * sh(5) - 4 * sh(7) + 2 * sh(11) - 4 * sh(15) + 3 * sh(17)))


# ----------------------------------------------------------------- PF-D2 ---

def _d2_b1(v, c, ch, s, sh):
    v2 = v * v
    return (8 * v2 * (11 * (-4002729 * c(1) + 2078430 * c(2) - 724279 * c(3) + 2346178) * v2
                      + 725760 * (-62 * c(1) + 59 * c(2) - 40 * c(3) + 26 * c(4) - 8 * c(5)
                                  + c(6) + 35) * sh(1) ** 2) * ch(1) ** 3
            + 483840 * sh(1) ** 3 * (v * (30 * c(1) + 30 * c(2) + 30 * c(3) + 13 * c(4)
                                          + 18 * c(5) + 12 * c(6) - 5 * c(7))
                                     + 3 * (5 * v + s(4) + s(7))))


def _d2_b2(v, c, ch, s, sh):
    v2 = v * v
    return (-8 * v2 * (-9314063 * v2 + 572 * (22949 * v2 - 120960) * c(1)
                       + 44 * (1391040 - 428431 * v2) * c(2) + (9699668 * v2 - 46287360) * c(3)
                       + (27699840 - 7967069 * v2) * c(4) - 10644480 * c(5) + 1108800 * c(6)
                       + 241920 * c(7) - 60480 * c(8) + 35925120) * ch(1) ** 3
            - 322560 * sh(1) ** 3 * (2 * v * (90 * c(1) + 90 * c(2) + 81 * c(3) + 50 * c(4)
                                              + 49 * c(5) + 30 * c(6) - 4 * c(7) - 2 * c(8))
                                     + 3 * (30 * v + s(3) + 4 * s(4) + s(5) + s(6)
                                            + 4 * s(7) + s(8))))


def _d2_b3(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (10080 * (8 * v * (1980 * c(1) + 1961 * c(2) + 1680 * c(3) + 1226 * c(4)
                              + 1015 * c(5) + 591 * c(6) + 50 * c(7) - 52 * c(8)
                              - 3 * c(9) + 990) * sh(1) ** 3
                     - 39 * ch(3) + 3 * (13 * ch(5) + 32 * ch(7) - 46 * ch(9) + 46 * ch(13)
                                         - 32 * ch(15) - 13 * ch(17) + 13 * ch(19) + ch(21)))
            - ch(1) * ((11 * (6333473 * c(2) + 4157054 * c(3) + 3619356 * c(4)
                              + 2960054 * c(5) + 724279 * c(6)) * v2
                        + 4 * (17018353 * v2 + 438480) * c(1)
                        + 20160 * (-652 * c(2) + 445 * c(3) - 118 * c(4) - 675 * c(5)
                                   + 939 * c(6) + 129 * c(7) - 104 * c(8) + 14 * c(9)
                                   + c(10))) * v2
                       + 12 * (2409451 * v4 - 110880 * v2 + 2520)))


def _d2_b4(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (3 * (432759107 * v4 - 7257600 * v2 + 483840) * ch(1)
            + 362880 * (17 * ch(3) - 31 * ch(5) - 16 * ch(7) + 37 * ch(9) - 37 * ch(13)
                        + 16 * ch(15) + 31 * ch(17) - 17 * ch(19) - 4 * ch(21))
            + v * (v * (11 * (103979586 * ch(5) + 82091598 * ch(7) + 62181040 * ch(9)
                              + 36275904 * ch(11) + 724279 * (15 * ch(13) + ch(15))) * v2
                        + (1298904167 * v2 - 104025600) * ch(3)
                        + 60480 * (-18 * ch(5) - 366 * ch(7) - 1325 * ch(9) + 957 * ch(11)
                                   + 2370 * ch(13) + 718 * ch(15) - 279 * ch(17)
                                   + 15 * ch(19) + 8 * ch(21)))
                   - 1935360 * (1650 * c(1) + 1612 * c(2) + 1365 * c(3) + 1066 * c(4)
                                + 819 * c(5) + 468 * c(6) + 100 * c(7) - 34 * c(8)
                                - 6 * c(9) + 825) * sh(1) ** 3))


def _d2_b5(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (-24 * (40469957 * v4 - 1058400 * v2 + 70560) * ch(1)
            + 60480 * (-44 * ch(3) + 117 * ch(5) + 37 * ch(7) - 109 * ch(9) + 109 * ch(13)
                       - 37 * ch(15) - 117 * ch(17) + 44 * ch(19) + 28 * ch(21))
            + v * (161280 * (14850 * c(1) + 14318 * c(2) + 12210 * c(3) + 9699 * c(4)
                             + 7266 * c(5) + 4152 * c(6) + 1125 * c(7) - 176 * c(8)
                             - 84 * c(9) + 7425) * sh(1) ** 3
                   + v * (-11 * (76636238 * ch(5) + 62120365 * ch(7) + 46335777 * ch(9)
                                 + 26765870 * ch(11) + 9510034 * ch(13)
                                 + 1196642 * ch(15)) * v2
                          + 14 * (4348800 - 69382489 * v2) * ch(3)
                          + 20160 * (288 * ch(5) + 1506 * ch(7) + 1900 * ch(9) - 2112 * ch(11)
                                     - 4320 * ch(13) - 1913 * ch(15) + 339 * ch(17)
                                     + 60 * ch(19) - 28 * ch(21)))))


def _d2_b6(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (3 * (521152357 * v4 - 16934400 * v2 + 1128960) * ch(1)
            + 241920 * (7 * ch(3) - 33 * ch(5) - 20 * ch(7) + 41 * ch(9) - 41 * ch(13)
                        + 20 * ch(15) + 33 * ch(17) - 7 * (ch(19) + 2 * ch(21)))
            + v * (v * (11 * (123210823 * ch(5) + 99307625 * ch(7) + 73495191 * ch(9)
                              + 43125241 * ch(11) + 15932285 * ch(13)
                              + 2736371 * ch(15)) * v2
                        + (1526016833 * v2 - 73382400) * ch(3)
                        - 40320 * (774 * ch(5) + 1002 * ch(7) + 1333 * ch(9) - 1617 * ch(11)
                                   - 3258 * ch(13) - 1442 * ch(15) + 51 * ch(17)
                                   + 105 * ch(19) - 28 * ch(21)))
                   - 1290240 * (2970 * c(1) + 2837 * c(2) + 2445 * c(3) + 1938 * c(4)
                                + 1446 * c(5) + 831 * c(6) + 240 * c(7) - 14 * c(8)
                                - 21 * c(9) + 1485) * sh(1) ** 3))


def _d2_b7(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (54 * (50601001 * v4 - 1764000 * v2 + 117600) * ch(1)
            + 1270080 * (ch(3) - 9 * ch(5) - 8 * ch(7) + 14 * ch(9) - 14 * ch(13)
                         + 8 * ch(15) + 9 * ch(17) - ch(19) - 5 * ch(21))
            + v * (v * (11 * (3 * (71792647 * ch(5) + 57772764 * ch(7) + 42931200 * ch(9)
                                   + 25158645 * ch(11) + 9410087 * ch(13))
                              + 5313226 * ch(15)) * v2
                        + (2670318541 * v2 - 112190400) * ch(3)
                        + 423360 * (-171 * ch(5) - 141 * ch(7) - 221 * ch(9)
                                    + 264 * ch(11) + 540 * ch(13) + 229 * ch(15)
                                    + 6 * ch(17) - 21 * ch(19) + 5 * ch(21)))
                   - 3386880 * (1980 * c(1) + 1885 * c(2) + 1632 * c(3) + 1290 * c(4)
                                + 963 * c(5) + 555 * c(6) + 162 * c(7) - 4 * c(8)
                                - 15 * c(9) + 990) * sh(1) ** 3))


# ----------------------------------------------------------------- PF-D3 ---

def _d3_b1(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v5 = v4 * v
    return (140734 * ch(1) * v5 + 12 * (5357 * v4 - 1680 * v2 + 480) * ch(3) * v
            + (4 * (21791 * v4 + 6480 * v2 - 3600) * ch(5)
               + (97229 * v4 - 27360 * v2 + 8640) * ch(7)
               + (32989 * v4 - 7200 * v2 + 10800) * ch(9)
               + 80 * (-8 * v * (492 * c(1) + 492 * c(2) + 301 * c(3) + 288 * c(4)
                                 + 215 * c(5) - 86 * c(6) - 60 * c(7) + 26 * c(8)
                                 + 246) * sh(1) ** 3
                       + 33 * (16 * v2 - 9) * ch(11) + 54 * (3 - 2 * v2) * ch(13)
                       + 30 * (3 - 4 * v2) * ch(15) + 9 * (8 * v2 - 13) * ch(17)
                       + 3 * (9 - 4 * v2) * ch(19))) * v
            - 61440 * ch(1) ** 2 * (2 * c(1) + 2 * c(2) + 2 * c(3) + 2 * c(4) + 2 * c(6)
                                    + 1) * sh(1) ** 5)


def _d3_b2(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v5 = v4 * v
    return (84282 * ch(1) * v5 + 4 * (20504 * v4 - 4200 * v2 + 1125) * ch(3) * v
            + (12 * (4774 * v4 + 2160 * v2 - 975) * ch(5)
               + 15 * (4015 * v4 - 2112 * v2 + 552) * ch(7)
               + (32989 * v4 + 4860 * v2 + 6480) * ch(9)
               + 60 * (99 * (5 * v2 - 3) * ch(11) + 3 * (63 - 71 * v2) * ch(13)
                       + (60 - 11 * v2) * ch(15)
                       + 2 * (-4 * v * (492 * c(1) + 492 * c(2) + 286 * c(3) + 310 * c(4)
                                        + 202 * c(5) - 95 * c(6) - 38 * c(7) + 19 * c(8)
                                        + 246) * sh(1) ** 3
                              + 3 * (5 * v2 - 17) * ch(17) - 3 * (v2 - 4) * ch(19)))) * v
            - 46080 * ch(1) ** 2 * (2 * c(1) + 2 * c(2) + 2 * c(3) + 2 * c(4) + 2 * c(6)
                                    + 1) * sh(1) ** 5)


def _d3_b3(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (-61440 * ch(1) ** 2 * (22 * c(1) + 22 * c(2) + 21 * c(3) + 16 * c(4) + 13 * c(5)
                                   + 9 * c(6) + 6 * c(7) + c(8) + 11) * sh(1) ** 5
            + 2 * v * (604527 * v4 - 31000 * v2 + 6600) * ch(1)
            + v * (1090199 * v4 - 5920 * v2 - 17520) * ch(3)
            + v * ((951159 * v4 - 47360 * v2 - 7560) * ch(5)
                   + 5 * (148753 * v4 - 10576 * v2 + 3480) * ch(7)
                   + (444741 * v4 + 48080 * v2 - 7200) * ch(9)
                   + 120 * (-132 * ch(11) + 60 * ch(13) + 218 * ch(15) - 36 * ch(17)
                            - 118 * ch(19) + 15 * ch(21) + 7 * ch(23))
                   + v * (11 * v * (15863 * v2 + 8960) * ch(11)
                          + v * (32989 * v2 + 37280) * ch(13)
                          - 40 * (8 * (10601 * c(1) + 9368 * c(2) + 7755 * c(3) + 5858 * c(4)
                                       + 3103 * c(5) + 538 * c(6) - 457 * c(7) - 154 * c(8)
                                       + 70 * c(9) + 14 * c(10) + 5412) * sh(1) ** 3
                                  + v * (383 * ch(15) + 103 * ch(17)
                                         + 4 * (-26 * ch(19) + 2 * ch(21) + ch(23)))))))


def _d3_b4(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (-15360 * ch(1) ** 2 * (110 * c(1) + 110 * c(2) + 108 * c(3) + 78 * c(4)
                                   + 66 * c(5) + 44 * c(6) + 32 * c(7) + 2 * c(8)
                                   + 55) * sh(1) ** 5
            + 6 * v * (252263 * v4 - 15900 * v2 + 3720) * ch(1)
            + v * (1374791 * v4 + 33000 * v2 - 30780) * ch(3)
            + v * (5 * (239129 * v4 - 18288 * v2 - 2052) * ch(5)
                   + 15 * (62139 * v4 - 4720 * v2 + 2040) * ch(7)
                   + (553817 * v4 + 79080 * v2 - 12600) * ch(9)
                   + 180 * (-143 * ch(11) + 59 * ch(13) + 237 * ch(15) - 75 * ch(17)
                            - 104 * ch(19) + 28 * ch(21) + 2 * ch(23))
                   + v * (165 * v * (1243 * v2 + 760) * ch(11)
                          + v * (32989 * v2 + 42360) * ch(13)
                          - 20 * (8 * (26818 * c(1) + 23302 * c(2) + 19472 * c(3)
                                       + 14923 * c(4) + 7646 * c(5) + 934 * c(6)
                                       - 1360 * c(7) - 200 * c(8) + 194 * c(9)
                                       + 11 * c(10) + 13530) * sh(1) ** 3
                                  + 3 * v * (426 * ch(15) + 5 * ch(17) - 77 * ch(19)
                                             + 15 * ch(21) + ch(23))))))


def _d3_b5(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (-184320 * ch(1) ** 2 * (330 * c(1) + 326 * c(2) + 298 * c(3) + 250 * c(4)
                                    + 188 * c(5) + 142 * c(6) + 80 * c(7) + 32 * c(8)
                                    + 4 * c(9) + 165) * sh(1) ** 5
            + 480 * v * (109813 * v4 - 4160 * v2 + 384) * ch(1)
            + 12 * v * (4062663 * v4 - 134080 * v2 - 19200) * ch(3)
            + v * (12 * (3490311 * v4 - 138560 * v2 - 16800) * ch(5)
                   + (32182799 * v4 - 992640 * v2 + 192960) * ch(7)
                   + (20304031 * v4 + 1640640 * v2 - 74160) * ch(9)
                   + 720 * (-627 * ch(11) + 532 * ch(13) + 788 * ch(15) - 17 * ch(17)
                            - 385 * ch(19) - 176 * ch(21) + 52 * ch(23) + 12 * ch(25))
                   + v * (v * (32989 * (17 * ch(15) + ch(17)) * v2
                               + 176 * (54469 * v2 + 16860) * ch(11)
                               + 16 * (192181 * v2 + 97440) * ch(13)
                               + 480 * (352 * ch(15) - 232 * ch(17) + 22 * ch(19)
                                        + 68 * ch(21) - 11 * ch(23) - 3 * ch(25)))
                          - 1920 * (77156 * c(1) + 69308 * c(2) + 57403 * c(3) + 42088 * c(4)
                                    + 23663 * c(5) + 7258 * c(6) - 332 * c(7) - 962 * c(8)
                                    - 52 * c(9) + 152 * c(10) + 22 * c(11)
                                    + 40106) * sh(1) ** 3)))


def _d3_b6(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (-92160 * ch(1) ** 2 * (66 * c(1) + 66 * c(2) + 61 * c(3) + 50 * c(4) + 37 * c(5)
                                   + 29 * c(6) + 16 * c(7) + 5 * c(8) + 33) * sh(1) ** 5
            + 6 * v * (889361 * v4 - 36900 * v2 + 5880) * ch(1)
            + v * (4932719 * v4 - 121800 * v2 - 42840) * ch(3)
            + v * (3 * (1410343 * v4 - 62640 * v2 - 11880) * ch(5)
                   + 48 * (68101 * v4 - 3465 * v2 + 1110) * ch(7)
                   + 4 * (502843 * v4 + 53175 * v2 - 2790) * ch(9)
                   + 3 * (11 * (26231 * v4 + 10980 * v2 - 2520) * ch(11)
                          + (78023 * v4 + 46140 * v2 + 19560) * ch(13)
                          + 2 * ((4829 * v4 - 1870 * v2 + 13890) * ch(15)
                                 - 10 * (8 * v * (31262 * c(1) + 27954 * c(2) + 23122 * c(3)
                                                  + 17249 * c(4) + 9324 * c(5) + 2061 * c(6)
                                                  - 650 * c(7) - 363 * c(8) + 74 * c(9)
                                                  + 55 * c(10) + 16236) * sh(1) ** 3
                                         + 3 * (67 * v2 + 99) * ch(17)
                                         + 21 * (32 - 5 * v2) * ch(19)
                                         + (84 - 31 * v2) * ch(21)
                                         + 15 * (v2 - 6) * ch(23))))))


def _d3_b7(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    return (-122880 * ch(1) ** 2 * (462 * c(1) + 452 * c(2) + 417 * c(3) + 344 * c(4)
                                    + 271 * c(5) + 191 * c(6) + 118 * c(7) + 45 * c(8)
                                    + 10 * c(9) + 231) * sh(1) ** 5
            + 2 * v * (24403159 * v4 - 927600 * v2 + 75600) * ch(1)
            + 2 * v * (22599203 * v4 - 730560 * v2 - 111600) * ch(3)
            + v * (6 * (6473137 * v4 - 267360 * v2 - 17880) * ch(5)
                   + 2 * (14893043 * v4 - 320160 * v2 + 65880) * ch(7)
                   + 6 * (3171377 * v4 + 240960 * v2 - 28320) * ch(9)
                   + 720 * (-264 * ch(11) + 302 * ch(13) + 664 * ch(15) + 50 * ch(17)
                            - 348 * ch(19) - 127 * ch(21) + 5 * ch(23) + 20 * ch(25))
                   + v * (v * (66 * (142321 * v2 + 36320) * ch(11)
                               + 2 * (1641761 * v2 + 744960) * ch(13)
                               + (729971 * v2 + 262800) * ch(15)
                               + (84227 * v2 - 61680) * ch(17)
                               + 480 * (24 * ch(19) + 32 * ch(21) + 5 * ch(23) - 5 * ch(25)))
                          - 640 * (214989 * c(1) + 192536 * c(2) + 159857 * c(3)
                                   + 116994 * c(4) + 66367 * c(5) + 23162 * c(6)
                                   + 1179 * c(7) - 2150 * c(8) - 278 * c(9) + 270 * c(10)
                                   + 110 * c(11) + 111232) * sh(1) ** 3)))


# ----------------------------------------------------------------- PF-D4 ---

def _d4_b1(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return ((11858 * v6 - 1512 * v4 + 1005 * v2 - 60) * ch(1)
            + 9 * (1540 * v6 + 280 * v4 - 271 * v2 + 20) * ch(3)
            + 60 * (-ch(5) - 6 * ch(7) + 8 * ch(9) - 8 * ch(13) + 6 * ch(15) + ch(17)
                    - 3 * ch(19) + ch(21))
            + v * (-3072 * ch(1) ** 2 * (18 * c(1) + 18 * c(2) + 18 * c(3) + 3 * c(4)
                                         + 14 * c(5) + 4 * c(6) - 7 * c(7) + 9) * sh(1) ** 5
                   - 16 * v2 * (2244 * c(1) + 1419 * c(2) + 1480 * c(3) + 914 * c(4)
                                - 961 * c(5) - 535 * c(6) + 428 * c(7) + 104 * c(8)
                                - 77 * c(9) + 1122) * sh(1) ** 3
                   + v * (11044 * v4 - 3816 * v2 + 1401) * ch(5)
                   + v * ((4675 * v4 + 180 * v2 + 2358) * ch(7)
                          + (803 * v4 + 5028 * v2 - 5376) * ch(9)
                          + 3 * (44 * (18 - 13 * v2) * ch(11) + 4 * (283 - 155 * v2) * ch(13)
                                 + 2 * (212 * v2 - 525) * ch(15) + (40 * v2 - 71) * ch(17)
                                 + (285 - 92 * v2) * ch(19) + (20 * v2 - 71) * ch(21)))))


def _d4_b2(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (2 * (77077 * v6 - 672 * v4 - 1074 * v2 + 120) * ch(1)
            + 6 * (23705 * v6 - 1920 * v4 - 22 * v2 + 40) * ch(3)
            - 240 * (4 * ch(5) - ch(7) - 2 * ch(9) + 2 * ch(13) + ch(15) - 4 * ch(17)
                     + ch(19) + 2 * ch(21) - ch(23))
            + v * (-6144 * ch(1) ** 2 * (108 * c(1) + 108 * c(2) + 77 * c(3) + 70 * c(4)
                                         + 43 * c(5) + 21 * c(6) - 6 * c(7) - 13 * c(8)
                                         + 54) * sh(1) ** 5
                   - 32 * v2 * (11668 * c(1) + 10196 * c(2) + 7776 * c(3) + 2663 * c(4)
                                - 1296 * c(5) - 1641 * c(6) + 164 * c(7) + 661 * c(8)
                                + 12 * c(9) - 107 * c(10) + 6732) * sh(1) ** 3
                   + v * (113707 * v4 - 6972 * v2 + 7080) * ch(5)
                   + v * (67925 * v4 + 10140 * v2 - 8412) * ch(7)
                   + v * (3 * (8283 * v4 + 4572 * v2 - 1120) * ch(9)
                          + 11 * (365 * v4 - 12 * v2 + 432) * ch(11)
                          + 12 * ((742 - 505 * v2) * ch(13) + (57 * v2 - 124) * ch(15)
                                  + (185 * v2 - 689) * ch(17) + (143 - 41 * v2) * ch(19)
                                  + 2 * (86 - 15 * v2) * ch(21) + (10 * v2 - 59) * ch(23)))))


def _d4_b3(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return ((411884 * v6 - 10092 * v4 - 5115 * v2 + 660) * ch(1)
            + 3 * (126445 * v6 - 7800 * v4 + 1598 * v2 - 80) * ch(3)
            + 60 * (-14 * ch(5) - ch(7) + 13 * ch(9) - 13 * ch(13) + ch(15) + 14 * ch(17)
                    + ch(19) - 10 * ch(21) - ch(23) + 3 * ch(25))
            + v * (-3072 * ch(1) ** 2 * (594 * c(1) + 546 * c(2) + 458 * c(3) + 355 * c(4)
                                         + 244 * c(5) + 108 * c(6) - 3 * c(7) - 40 * c(8)
                                         - 18 * c(9) + 297) * sh(1) ** 5
                   + 2 * v * (148951 * v4 - 3768 * v2 + 1086) * ch(5)
                   + v * (186340 * v4 + 20100 * v2 - 8697) * ch(7)
                   + v * (33 * (2648 * v4 + 636 * v2 - 187) * ch(9)
                          + 132 * (205 * v4 + 29 * v2 + 81) * ch(11)
                          + 11 * (365 * v4 - 450 * v2 + 1191) * ch(13)
                          - 3 * (731 * ch(15) + 3298 * ch(17) + 593 * ch(19) - 1028 * ch(21)
                                 - 149 * ch(23) + 147 * ch(25))
                          - 2 * v * (8 * (64294 * c(1) + 54653 * c(2) + 38493 * c(3)
                                          + 15944 * c(4) - 1305 * c(5) - 4899 * c(6)
                                          - 676 * c(7) + 1690 * c(8) + 633 * c(9)
                                          - 230 * c(10) - 117 * c(11) + 34074) * sh(1) ** 3
                                     + 3 * v * (171 * ch(15) - 365 * ch(17) - 73 * ch(19)
                                                + 10 * (9 * ch(21) + ch(23) - ch(25)))))))


def _d4_b4(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (4 * (674575 * v6 - 23478 * v4 - 4140 * v2 + 720) * ch(1)
            + 4 * (610445 * v6 - 25050 * v4 + 2328 * v2 - 240) * ch(3)
            + 240 * (-12 * ch(5) - 9 * ch(7) + 19 * ch(9) - 19 * ch(13) + 9 * ch(15)
                     + 11 * ch(17) + ch(19) - 7 * ch(21) - 5 * ch(23) + 3 * ch(25) + ch(27))
            + v * (-6144 * ch(1) ** 2 * (1947 * c(1) + 1780 * c(2) + 1532 * c(3) + 1153 * c(4)
                                         + 812 * c(5) + 376 * c(6) + 35 * c(7) - 80 * c(8)
                                         - 64 * c(9) - 11 * c(10) + 990) * sh(1) ** 5
                   + v * (1934185 * v4 - 35376 * v2 - 1440) * ch(5)
                   + v * (1264615 * v4 + 92640 * v2 - 22932) * ch(7)
                   + v * ((642895 * v4 + 114648 * v2 - 39588) * ch(9)
                          + 11 * (21955 * v4 + 2712 * v2 + 5508) * ch(11)
                          + 2 * (-16 * v * (210376 * c(1) + 176605 * c(2) + 122822 * c(3)
                                            + 57558 * c(4) + 5448 * c(5) - 9243 * c(6)
                                            - 2316 * c(7) + 2721 * c(8) + 1892 * c(9)
                                            - 50 * c(10) - 362 * c(11) - 61 * c(12)
                                            + 109790) * sh(1) ** 3
                                 + (30745 * v4 - 5910 * v2 + 33852) * ch(13)
                                 + (4015 * v4 - 1242 * v2 - 8928) * ch(15)
                                 + 6 * (5 * (87 * v2 - 608) * ch(17)
                                        + (261 * v2 - 1220) * ch(19)
                                        + 5 * (130 - 17 * v2) * ch(21)
                                        + (499 - 75 * v2) * ch(23)
                                        + 3 * (5 * v2 - 39) * ch(25)
                                        + (5 * v2 - 41) * ch(27))))))


def _d4_b5(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (5 * (1193060 * v6 - 41904 * v4 - 5997 * v2 + 1020) * ch(1)
            + 60 * (-14 * ch(3) - 126 * ch(5) + 3 * ch(7) + 68 * ch(9) - 68 * ch(13)
                    - 4 * ch(15) + 113 * ch(17) + 9 * ch(19) - 63 * ch(21) - 22 * ch(23)
                    + 5 * ch(25) + 13 * ch(27) + ch(29))
            + v * (-3072 * ch(1) ** 2 * (8642 * c(1) + 8000 * c(2) + 6715 * c(3) + 5297 * c(4)
                                         + 3528 * c(5) + 1774 * c(6) + 335 * c(7)
                                         - 291 * c(8) - 234 * c(9) - 84 * c(10) - 5 * c(11)
                                         + 4438) * sh(1) ** 5
                   + 6 * v * (900240 * v4 - 34950 * v2 + 1097) * ch(3)
                   + 2 * v * (2142800 * v4 - 21390 * v2 + 4761) * ch(5)
                   + v * ((2856205 * v4 + 170220 * v2 - 81459) * ch(7)
                          + 3 * (511335 * v4 + 68340 * v2 - 6064) * ch(9)
                          + 44 * (14405 * v4 + 1962 * v2 + 2133) * ch(11)
                          + 3 * (37216 * ch(13) - 1456 * ch(15) - 26299 * ch(17)
                                 - 9051 * ch(19) + 3561 * ch(21) + 2870 * ch(23)
                                 + 257 * ch(25) - 503 * ch(27) - 35 * ch(29))
                          + v * (v * (20 * (9515 * v2 - 318) * ch(13)
                                      + 9 * (4235 * v2 - 684) * ch(15)
                                      + 5 * (803 * v2 + 2052) * ch(17)
                                      + 12 * (404 * ch(19) - 84 * ch(21) - 100 * ch(23)
                                              - 12 * ch(25) + 15 * ch(27) + ch(29)))
                                 - 16 * (923815 * c(1) + 780435 * c(2) + 544332 * c(3)
                                         + 265090 * c(4) + 54870 * c(5) - 23058 * c(6)
                                         - 10352 * c(7) + 8726 * c(8) + 6750 * c(9)
                                         + 651 * c(10) - 1000 * c(11) - 444 * c(12)
                                         - 25 * c(13) + 488520) * sh(1) ** 3))))


def _d4_b6(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (4 * (2363372 * v6 - 84162 * v4 - 11175 * v2 + 1860) * ch(1)
            + 24 * (355960 * v6 - 12795 * v4 + 476 * v2 - 80) * ch(3)
            + 240 * (-39 * ch(5) - 3 * ch(7) + 23 * ch(9) - 23 * ch(13) + 2 * ch(15)
                     + 35 * ch(17) + 6 * ch(19) - 21 * ch(21) - 10 * ch(23) + 2 * ch(25)
                     + 4 * ch(27) + ch(29))
            + v * (-6144 * ch(1) ** 2 * (6889 * c(1) + 6340 * c(2) + 5369 * c(3) + 4201 * c(4)
                                         + 2829 * c(5) + 1439 * c(6) + 331 * c(7)
                                         - 177 * c(8) - 180 * c(9) - 69 * c(10) - 10 * c(11)
                                         + 3530) * sh(1) ** 5
                   + 4 * v * (1700006 * v4 - 14241 * v2 - 1503) * ch(5)
                   + 4 * v * (1147190 * v4 + 60825 * v2 - 25641) * ch(7)
                   + v * (12 * (210419 * v4 + 24831 * v2 - 1957) * ch(9)
                          + 44 * (24817 * v4 + 3201 * v2 + 3159) * ch(11)
                          + (356345 * v4 + 7080 * v2 + 156144) * ch(13)
                          - 12 * (262 * ch(15) + 8737 * ch(17) + 3825 * ch(19)
                                  - 2 * (498 * ch(21) + 523 * ch(23)
                                         + 67 * (ch(25) - ch(27))) + 35 * ch(29))
                          + v * (v * ((82599 * v2 - 6408) * ch(15)
                                      + 15 * (803 * v2 + 864) * ch(17)
                                      + (803 * v2 + 7584) * ch(19)
                                      - 12 * (81 * ch(21) + 135 * ch(23) + 23 * ch(25)
                                              - 15 * ch(27) - 4 * ch(29)))
                                 - 32 * (731642 * c(1) + 616515 * c(2) + 431394 * c(3)
                                         + 217139 * c(4) + 54930 * c(5) - 9918 * c(6)
                                         - 7072 * c(7) + 5350 * c(8) + 4914 * c(9)
                                         + 747 * c(10) - 614 * c(11) - 339 * c(12)
                                         - 50 * c(13) + 386010) * sh(1) ** 3))))


def _d4_b7(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (44 * (14828 * v4 + 1779 * v2 + 1971) * ch(11) * v2
            + 48 * (491 * v2 + 42) * sh(1) * v
            + 2 * (2652 - 18397 * v2) * sh(3) * v
            - 2 * (46961 * v2 + 1572) * sh(5) * v
            - 2 * (84467 * v2 + 996) * sh(7) * v
            + 92 * (132 - 1315 * v2) * sh(9) * v
            + 12 * (6461 * v2 - 1752) * sh(11) * v
            + 12 * (10789 * v2 - 2244) * sh(13) * v
            + 16 * (2921 * v2 + 987) * sh(15) * v
            + 112 * (219 - 122 * v2) * sh(17) * v
            + 16 * (570 - 1019 * v2) * sh(19) * v
            + 8 * (233 * v2 - 1146) * sh(21) * v
            + 4 * (1075 * v2 - 2004) * sh(23) * v
            + 10 * (25 * v2 + 12) * sh(25) * v
            + 2 * (372 - 131 * v2) * sh(27) * v
            + 30 * (12 - 5 * v2) * sh(29) * v
            + (5494852 * v6 - 200688 * v4 - 24198 * v2 + 4200) * ch(1)
            + (4966940 * v6 - 164820 * v4 + 6873 * v2 - 1500) * ch(3)
            + (3957316 * v6 - 37644 * v4 - 15639 * v2 - 3900) * ch(5)
            + (2678500 * v6 + 135480 * v4 - 37413 * v2 - 2340) * ch(7)
            + 2 * (742786 * v6 + 87156 * v4 - 15261 * v2 + 2220) * ch(9)
            + (217855 * v6 + 7320 * v4 + 91506 * v2 - 4440) * ch(13)
            + 4 * (13079 * v6 - 318 * v4 - 2646 * v2 + 540) * ch(15)
            + 2 * (4180 * v6 + 2820 * v4 - 25347 * v2 + 1740) * ch(17)
            + (737 * v6 + 4776 * v4 - 28968 * v2 + 960) * ch(19)
            - 6 * (54 * v4 - 863 * v2 + 380) * ch(21)
            - 24 * (45 * v4 - 347 * v2 + 80) * ch(23)
            + 9 * (-8 * v4 + 35 * v2 + 60) * ch(25)
            + 3 * (20 * v4 - 197 * v2 + 140) * ch(27)
            + 9 * (4 * v4 - 35 * v2 + 20) * ch(29))


# ----------------------------------------------------------------- PF-D5 ---

def _d5_b1(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (-122880 * ch(1) ** 4 * (2 * c(1) + 2 * c(2) + 2 * c(3) + 2 * c(4) + 2 * c(6)
                                    + 1) * sh(1) ** 7
            + 70 * v * (396 * v6 + 72 * v4 - 95 * v2 + 20) * ch(1)
            + 30 * v * (616 * v6 - 504 * v4 + 335 * v2 - 20) * ch(3)
            + v * (60 * (3 * v2 * (44 * v4 + 52 * v2 + 35) - 80) * ch(5)
                   + 30 * (66 * v6 + 408 * v4 - 979 * v2 + 220) * ch(7)
                   + 100 * (6 * ch(9) - 88 * ch(11) + 60 * ch(13) + 33 * ch(15) - 51 * ch(17)
                            + 6 * ch(19) + 12 * ch(21) - 4 * ch(23))
                   + v * (-2560 * ch(1) ** 2 * (84 * c(1) + 84 * c(2) - 13 * c(3) + 84 * c(4)
                                                + c(5) - 115 * c(6) + 31 * c(8)
                                                + 42) * sh(1) ** 5
                          - 16 * v2 * (641 * c(1) + 2520 * c(2) - 93 * c(3) - 5564 * c(4)
                                       + 13 * c(5) + 3882 * c(6) - c(7) - 1292 * c(8)
                                       + 174 * c(10) + 1260) * sh(1) ** 3
                          + 5 * v * ((44 * v4 - 2808 * v2 + 3966) * ch(9)
                                     + 88 * (44 - 9 * v2) * ch(11)
                                     + 24 * (73 * v2 - 212) * ch(13)
                                     - 3 * (24 * v2 + 121) * ch(15)
                                     + 3 * (735 - 184 * v2) * ch(17)
                                     + 6 * (20 * v2 - 71) * ch(19)
                                     + 12 * (6 * v2 - 29) * ch(21)
                                     + 4 * (29 - 6 * v2) * ch(23)))))


def _d5_b2(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (-737280 * ch(1) ** 4 * (12 * c(1) + 12 * c(2) + 12 * c(3) + 7 * c(4) + 10 * c(5)
                                    + 2 * c(6) + 5 * c(7) + 6) * sh(1) ** 7
            + 180 * v * (4620 * v6 - 672 * v4 + 13 * v2 + 120) * ch(1)
            + 45 * v * (14256 * v6 + 2344 * v4 + 1987 * v2 - 1300) * ch(3)
            + v * (45 * (8184 * v6 + 1608 * v4 - 6581 * v2 + 1420) * ch(5)
                   + 45 * (3256 * v6 - 588 * v4 + 4583 * v2 - 420) * ch(7)
                   - 300 * (123 * ch(9) - 154 * ch(11) + 130 * ch(13) - 96 * ch(15)
                            - 84 * ch(17) + 171 * ch(19) - 33 * ch(21) - 49 * ch(23)
                            + 19 * ch(25))
                   + v * (-7680 * ch(1) ** 2 * (1008 * c(1) + 497 * c(2) + 814 * c(3)
                                                + 140 * c(4) - 191 * c(5) - 231 * c(6)
                                                - 364 * c(7) + 62 * c(8) + 137 * c(9)
                                                + 504) * sh(1) ** 5
                          - 16 * v2 * (79446 * c(1) + 26700 * c(2) - 54673 * c(3)
                                       - 35424 * c(4) - 6282 * c(5) + 23632 * c(6)
                                       + 23514 * c(7) - 7782 * c(8) - 11000 * c(9)
                                       + 1044 * c(10) + 1755 * c(11) + 14510) * sh(1) ** 3
                          + 15 * v * (3 * (792 * v4 - 652 * v2 + 1075) * ch(9)
                                      + 22 * (12 * v4 - 102 * v2 - 47) * ch(11)
                                      + 2 * (582 * v2 + 1891) * ch(13)
                                      + 32 * (73 * v2 - 342) * ch(15)
                                      + 24 * (43 - 36 * v2) * ch(17)
                                      + 3 * (2131 - 300 * v2) * ch(19)
                                      + (364 * v2 - 1887) * ch(21)
                                      + (132 * v2 - 1151) * ch(23)
                                      + (461 - 60 * v2) * ch(25)))))


def _d5_b3(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (-368640 * ch(1) ** 4 * (66 * c(1) + 66 * c(2) + 56 * c(3) + 56 * c(4) + 30 * c(5)
                                    + 36 * c(6) + 10 * c(7) + 10 * c(8) + 33) * sh(1) ** 7
            + 120 * v * (17424 * v6 - 765 * v4 + 716 * v2 - 155) * ch(1)
            + 45 * v * (37026 * v6 + 92 * v4 - 5159 * v2 + 1100) * ch(3)
            + v * (15 * (70422 * v6 + 10188 * v4 + 9929 * v2 - 4220) * ch(5)
                   + 300 * (161 * ch(7) + 33 * ch(9) - 319 * ch(11) + 275 * ch(13)
                            + 81 * ch(15) - 123 * ch(17) + 20 * ch(19) - 72 * ch(21)
                            + 35 * (ch(23) + ch(25)) - 18 * ch(27))
                   + v * (-7680 * ch(1) ** 2 * (2233 * c(1) + 2261 * c(2) + 1114 * c(3)
                                                + 831 * c(4) - 199 * c(5) - 879 * c(6)
                                                - 369 * c(7) - 102 * c(8) + 137 * c(9)
                                                + 121 * c(10) + 1386) * sh(1) ** 5
                          - 16 * v2 * (106239 * c(1) + 46080 * c(2) - 45422 * c(3)
                                       - 97266 * c(4) - 7053 * c(5) + 48138 * c(6)
                                       + 23511 * c(7) - 2538 * c(8) - 10990 * c(9)
                                       - 5154 * c(10) + 1755 * c(11) + 1270 * c(12)
                                       + 93890) * sh(1) ** 3
                          + 15 * v * ((36 * v2 * (968 * v2 + 57) - 15475) * ch(7)
                                      + (12672 * v4 - 8132 * v2 + 20199) * ch(9)
                                      + 11 * (270 * v4 - 138 * v2 + 1105) * ch(11)
                                      + (330 * v4 + 3138 * v2 - 18373) * ch(13)
                                      + 3 * (284 * v2 - 921) * ch(15)
                                      + 3 * (453 - 68 * v2) * ch(17)
                                      + 2 * (1081 - 267 * v2) * ch(19)
                                      + 6 * (408 - 41 * v2) * ch(21)
                                      + (228 * v2 - 1609) * ch(23)
                                      + 5 * (12 * v2 - 131) * ch(25)
                                      + 4 * (93 - 10 * v2) * ch(27)))))


def _d5_b6(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (-737280 * ch(1) ** 4 * (782 * c(1) + 756 * c(2) + 681 * c(3) + 596 * c(4)
                                    + 446 * c(5) + 346 * c(6) + 196 * c(7) + 111 * c(8)
                                    + 36 * c(9) + 10 * c(10) + c(11) + 395) * sh(1) ** 7
            + 30 * v * (1475232 * v6 - 29700 * v4 + 2389 * v2 - 2620) * ch(1)
            + 15 * v * (2477376 * v6 + 16060 * v4 - 104631 * v2 + 10740) * ch(3)
            + v * (45 * (578688 * v6 + 24420 * v4 - 2109 * v2 - 3460) * ch(5)
                   + 90 * (168256 * v6 + 2904 * v4 - 93 * v2 + 1500) * ch(7)
                   - 300 * (366 * ch(9) + 1240 * ch(11) - 1456 * ch(13) - 1008 * ch(15)
                            + 376 * ch(17) + 568 * ch(19) + 624 * ch(21) - 226 * ch(23)
                            - 306 * ch(25) - 15 * ch(27) + 17 * ch(29) + 23 * ch(31)
                            + 3 * ch(33))
                   + v * (-7680 * ch(1) ** 2 * (53563 * c(1) + 45974 * c(2) + 30514 * c(3)
                                                + 15658 * c(4) - 559 * c(5) - 9759 * c(6)
                                                - 7958 * c(7) - 3102 * c(8) + 869 * c(9)
                                                + 1533 * c(10) + 666 * c(11) + 190 * c(12)
                                                + 17 * c(13) + 29210) * sh(1) ** 5
                          - 16 * v2 * (2248539 * c(1) + 884628 * c(2) - 465296 * c(3)
                                       - 896802 * c(4) - 222138 * c(5) + 364588 * c(6)
                                       + 334950 * c(7) + 63936 * c(8) - 93282 * c(9)
                                       - 73236 * c(10) - 9234 * c(11) + 9682 * c(12)
                                       + 5604 * c(13) + 1620 * c(14) + 137 * c(15)
                                       + 1505344) * sh(1) ** 3
                          + 30 * v * (88 * (2754 * v2 - 269) * v2 + 86133) * ch(9)
                          + 15 * v * (16 * (11814 * v4 - 1449 * v2 + 5183) * ch(11)
                                      + 8 * (7227 * v4 + 1638 * v2 - 13363) * ch(13)
                                      + 8 * (1683 * v4 + 1715 * v2 - 9429) * ch(15)
                                      + 8 * (297 * v4 + 315 * v2 - 1181) * ch(17)
                                      + 8 * (33 * v4 - 585 * v2 + 4033) * ch(19)
                                      + 8 * (2988 - 365 * v2) * ch(21)
                                      + 10 * (72 * v2 - 611) * ch(23)
                                      + 18 * (40 * v2 - 379) * ch(25)
                                      + (76 * v2 - 681) * ch(27)
                                      + (343 - 36 * v2) * ch(29)
                                      + (385 - 36 * v2) * ch(31)
                                      + (45 - 4 * v2) * ch(33)))))


def _d5_b7(v, c, ch, s, sh):
    v2 = v * v
    v4 = v2 * v2
    v6 = v4 * v2
    return (-737280 * ch(1) ** 4 * (457 * c(1) + 436 * c(2) + 406 * c(3) + 331 * c(4)
                                    + 281 * c(5) + 181 * c(6) + 131 * c(7) + 56 * c(8)
                                    + 26 * c(9) + 5 * c(10) + c(11) + 230) * sh(1) ** 7
            + 30 * v * ((3960 * v2 * (216 * v2 - 5) - 8761) * v2 + 1780) * ch(1)
            + 15 * v * (1435984 * v6 + 22000 * v4 - 3297 * v2 - 10980) * ch(3)
            + v * (45 * (337392 * v6 + 11440 * v4 - 27653 * v2 + 4460) * ch(5)
                   - 300 * (219 * ch(7) + 603 * ch(9) - 300 * ch(11) + 28 * ch(13)
                            - 756 * ch(15) - 148 * ch(17) + 776 * ch(19) + 96 * ch(21)
                            - 83 * ch(23) - 115 * ch(25) - 63 * ch(27) + 31 * ch(29)
                            + 7 * ch(31) + 3 * ch(33))
                   + v * (-7680 * ch(1) ** 2 * (32205 * c(1) + 25293 * c(2) + 19114 * c(3)
                                                + 8361 * c(4) - 241 * c(5) - 4841 * c(6)
                                                - 5127 * c(7) - 1558 * c(8) + 452 * c(9)
                                                + 766 * c(10) + 452 * c(11) + 95 * c(12)
                                                + 17 * c(13) + 16488) * sh(1) ** 5
                          + 45 * v * (1408 * (141 * v4 + v2) + 24571) * ch(7)
                          + 15 * v * (352 * (820 * v2 - 49) * v2 + 65325) * ch(9)
                          + v * (-16 * v * (1391199 * c(1) + 496638 * c(2) - 298296 * c(3)
                                            - 433962 * c(4) - 149583 * c(5) + 183078 * c(6)
                                            + 208215 * c(7) + 31836 * c(8) - 54047 * c(9)
                                            - 36606 * c(10) - 7569 * c(11) + 4842 * c(12)
                                            + 3624 * c(13) + 810 * c(14) + 137 * c(15)
                                            + 794124) * sh(1) ** 3
                                 + 90 * (18975 * v4 - 2632 * v2 + 4838) * ch(11)
                                 + 30 * (18117 * v4 + 2184 * v2 - 10934) * ch(13)
                                 + 15 * (-2372 * ch(17) + 25024 * ch(19) + 6864 * ch(21)
                                         - 925 * ch(23) - 3401 * ch(25) - 1173 * ch(27)
                                         + 509 * ch(29) + 125 * ch(31) + 45 * ch(33))
                                 + 30 * ((36 * (22 * v2 + 7) * ch(17)
                                          + 9 * (11 * v2 - 168) * ch(19)
                                          + (11 * v2 - 488) * ch(21) + 48 * ch(23)
                                          + 192 * ch(25) + 56 * ch(27)
                                          - 2 * (12 * ch(29) + 3 * ch(31) + ch(33))) * v2
                                         + (4488 * v4 + 5348 * v2 - 33558) * ch(15))))))


# ----------------------------------------------------------------- PF-D6 ---

def _d6_b1(v, c, ch, s, sh):
    v2 = v * v
    v3 = v2 * v
    v4 = v2 * v2
    v5 = v4 * v
    return (v * (-12 * (1459 * v4 - 970 * v2 + 60) * c(1)
                 + 4 * (7379 * v4 + 2805 * v2 - 1890) * c(2)
                 + 180 * (31 * c(3) + 44 * c(4) - 78 * c(5) - 10 * c(6) + 88 * c(7)
                          - 9 * c(8) - 46 * c(9) + 4 * c(10) + 9 * c(11))
                 + v * (v * ((46112 * v2 - 46950) * c(3)
                             + 30 * (764 * c(4) + 2470 * c(5) - 1370 * c(6) - 1908 * c(7)
                                     + 707 * c(8) + 726 * c(9) - 124 * c(10) - 111 * c(11))
                             + v * (2 * v * (31457280 * v * (7 * c(1) - 1)
                                             * sh(1) ** 9 * ch(1) ** 11
                                             - 33436 * c(4) - 24673 * c(5) + 23310 * c(6)
                                             + 15023 * c(7) - 7754 * c(8) - 4901 * c(9)
                                             + 1044 * c(10) + 669 * c(11))
                                    + 19950 * s(1) - 5752 * s(2) - 58277 * s(3)
                                    + 59598 * s(4) + 77003 * s(5) - 58792 * s(6)
                                    - 51447 * s(7) + 23233 * s(8) + 17843 * s(9)
                                    - 3480 * s(10) - 2552 * s(11)))
                        - 400 * (24 * c(1) + 24 * c(2) - 101 * c(3) + 108 * c(4)
                                 - 67 * c(5) - 173 * c(6) + 48 * c(7) + 59 * c(8)
                                 + 12) * s(1) ** 3))
            + 2 * (6278 * v5 - 5265 * v3 + 1170 * v + 840 * s(2) - 210 * s(3)
                   - 1260 * s(4) + 840 * s(5) + 840 * s(6) - 1260 * s(7) - 210 * s(8)
                   + 840 * s(9) - 210 * s(11)))


def _d6_b2(v, c, ch, s, sh):
    v2 = v * v
    v3 = v2 * v
    v4 = v2 * v2
    v5 = v4 * v
    return (v * (8 * (41029 * v4 - 6060 * v2 - 2340) * c(1)
                 + (216658 * v4 - 231600 * v2 + 29520) * c(2)
                 + 720 * (8 * c(3) - 73 * c(4) + 46 * c(5) + 20 * c(6) - 26 * c(7)
                          + 58 * c(8) - 8 * c(9) - 53 * c(10) + 6 * c(11) + 13 * c(12))
                 + v * (v * (4 * (47520 - 64489 * v2) * c(3)
                             + 240 * (889 * c(4) - 472 * c(5) + 142 * c(6) - 427 * c(7)
                                      - 682 * c(8) + 393 * c(9) + 383 * c(10) - 84 * c(11)
                                      - 71 * c(12))
                             + v * (2 * v * (15728640 * v * (42 * c(2) + 47)
                                             * sh(1) ** 9 * ch(1) ** 11
                                             - 53557 * c(4) - 23336 * c(5) - 10180 * c(6)
                                             + 62776 * c(7) + 31222 * c(8) - 28732 * c(9)
                                             - 15557 * c(10) + 4554 * c(11) + 2637 * c(12))
                                    - 3 * (4524 * s(1) + 89649 * s(2) - 109162 * s(3)
                                           - 66107 * s(4) + 12508 * s(5) - 17082 * s(6)
                                           + 55388 * s(7) + 44508 * s(8) - 32396 * s(9)
                                           - 22567 * s(10) + 5770 * s(11) + 3929 * s(12))))
                        - 2400 * (48 * c(1) - 83 * c(2) + 134 * c(3) - 160 * c(4)
                                  - 76 * c(5) - 19 * c(6) - 100 * c(7) + 46 * c(8)
                                  + 54 * c(9) + 24) * s(1) ** 3))
            - 4 * (28927 * v5 - 18240 * v3 + 1080 * v - 2520 * s(1) + 630 * s(2)
                   + 1260 * s(3) - 1890 * s(4) + 1260 * s(5) + 1260 * s(6) - 1890 * s(7)
                   + 1260 * s(8) + 630 * s(9) - 1890 * s(10) + 630 * s(12)))


def _d6_b3(v, c, ch, s, sh):
    v2 = v * v
    v3 = v2 * v
    v4 = v2 * v2
    v5 = v4 * v
    return (4 * (221284 * v5 - 37695 * v3 - 9090 * v - 1575 * s(1) + 5670 * s(2)
                 + 2520 * s(3) - 10080 * s(4) + 4095 * s(5) + 4095 * s(6) - 10080 * s(7)
                 + 2520 * s(8) + 4095 * s(9) - 1575 * s(10) + 2520 * s(11) - 1575 * s(13))
            + v * (-2 * (29854 * v4 + 91035 * v2 - 24390) * c(1)
                   - 180 * (402 * c(2) + 154 * c(3) - 804 * c(4) + 973 * c(5) - 115 * c(6)
                            - 1308 * c(7) + 374 * c(8) + 251 * c(9) + c(10) + 326 * c(11)
                            - 60 * c(12) - 125 * c(13))
                   + v * (1200 * (159 * c(1) - 968 * c(2) + 1401 * c(3) - 459 * c(4)
                                  + 995 * c(5) + 1205 * c(6) - 223 * c(7) + 73 * c(8)
                                  - 44 * (5 * c(9) + 6) - 247 * c(10)) * s(1) ** 3
                          + 4 * v * (70204 * v2 + 98445) * c(2)
                          + v * ((366842 * v2 - 234180) * c(3)
                                 + 30 * (9964 * c(4) + 32995 * c(5) - 25405 * c(6)
                                         - 22548 * c(7) + 4066 * c(8) + 105 * c(9)
                                         + 4791 * c(10) + 4542 * c(11) - 1516 * c(12)
                                         - 1219 * c(13))
                                 + v * (2 * v * (15728640 * v * (294 * c(1) + 70 * c(3) - 1)
                                                 * sh(1) ** 9 * ch(1) ** 11
                                                 - 517606 * c(4) - 235773 * c(5)
                                                 + 227655 * c(6) + 127788 * c(7)
                                                 + 14656 * c(8) - 3946 * c(9)
                                                 - 39071 * c(10) - 18661 * c(11)
                                                 + 8590 * c(12) + 4745 * c(13))
                                        - 3 * (222705 * s(1) - 265046 * s(2) + 119729 * s(3)
                                               - 332466 * s(4) - 319876 * s(5)
                                               + 278964 * s(6) + 170124 * s(7) - 3966 * s(8)
                                               + 739 * s(9) - 48110 * s(10) - 30601 * s(11)
                                               + 12050 * s(12) + 7780 * s(13)))))))


def _d6_b4(v, c, ch, s, sh):
    v2 = v * v
    v3 = v2 * v
    v4 = v2 * v2
    v5 = v4 * v
    return (v * (8 * (95239 * v4 + 132 * v2 - 6660) * c(1)
                 + 720 * (37 * c(2) + 36 * c(3) - 129 * c(4) + 92 * c(5) + 40 * c(6)
                          - 36 * c(7) + 110 * c(8) - 30 * c(9) - 77 * c(10) + 8 * c(11)
                          - 3 * c(12) + 4 * c(13) + 8 * c(14))
                 + v * (-160 * (3540 * c(1) - 4081 * c(2) + 4258 * c(3) - 6420 * c(4)
                                - 2416 * c(5) - 1709 * c(6) - 3480 * c(7) + 1352 * c(8)
                                + 946 * c(9) + 420 * c(10) + 452 * c(11)
                                - 122) * s(1) ** 3
                        + 22 * v * (9223 * v2 - 12168) * c(2)
                        + v * (4 * (76560 - 94681 * v2) * c(3)
                               + 48 * (7741 * c(4) - 4350 * c(5) + 1490 * c(6) - 4837 * c(7)
                                       - 5698 * c(8) + 2835 * c(9) + 2127 * c(10)
                                       + 178 * c(11) + 205 * c(12) - 228 * c(13)
                                       - 176 * c(14))
                               + v * (2 * v * (22020096 * v * (70 * c(2) + 10 * c(4) + 63)
                                               * sh(1) ** 9 * ch(1) ** 11
                                               - 55381 * c(4) - 74360 * c(5) - 19668 * c(6)
                                               + 94024 * c(7) + 43706 * c(8) - 24996 * c(9)
                                               - 14833 * c(10) - 3270 * c(11) - 1099 * c(12)
                                               + 1808 * c(13) + 984 * c(14))
                                      + 210232 * s(1) - 456433 * s(2) + 711254 * s(3)
                                      + 322575 * s(4) - 9720 * s(5) + 108420 * s(6)
                                      - 311124 * s(7) - 200610 * s(8) + 107672 * s(9)
                                      + 68535 * s(10) + 11650 * s(11) + 6143 * s(12)
                                      - 8148 * s(13) - 5090 * s(14)))))
            - 4 * (18341 * v5 + 1344 * v3 - 2520 * v - 3360 * s(1) + 210 * s(2)
                   + 2100 * s(3) - 3150 * s(4) + 2520 * s(5) + 2520 * s(6) - 3150 * s(7)
                   + 2520 * s(8) + 210 * s(9) - 3150 * s(10) + 420 * s(11) + 210 * s(12)
                   + 420 * s(14)))


def _d6_b5(v, c, ch, s, sh):
    v2 = v * v
    v3 = v2 * v
    v4 = v2 * v2
    v5 = v4 * v
    return (6 * (165878 * v5 - 9859 * v3 - 9930 * v - 630 * s(1) + 2520 * s(2)
                 + 2310 * s(3) - 5670 * s(4) + 1680 * s(5) + 1680 * s(6) - 5880 * s(7)
                 + 2310 * s(8) + 1680 * s(9) - 840 * s(10) + 2310 * s(11) - 210 * s(12)
                 - 840 * s(13) - 210 * s(15))
            + v * (6 * (5893 * v4 - 52145 * v2 + 9930) * c(1)
                   + 4 * (99685 * v4 + 104103 * v2 - 13590) * c(2)
                   + 180 * (-361 * c(3) + 787 * c(4) - 740 * c(5) + 212 * c(6)
                            + 1104 * c(7) - 377 * c(8) - 40 * c(9) - 66 * c(10)
                            - 395 * c(11) + 65 * c(12) + 78 * c(13) + 12 * c(14)
                            + 23 * c(15))
                   + v * (v * (2 * (96427 * v2 + 513) * c(3)
                               + (203778 - 842996 * v2) * c(4)
                               - 6 * (-131620 * c(5) + 116572 * c(6) + 82296 * c(7)
                                      + 145 * c(8) + 16904 * c(9) - 28534 * c(10)
                                      - 23389 * c(11) + 4087 * c(12) + 2910 * c(13)
                                      + 1236 * c(14) + 925 * c(15))
                               + v * (2 * v * (44040192 * v * (140 * c(1) ** 3 + 3 * c(5))
                                               * sh(1) ** 9 * ch(1) ** 11
                                               - 147678 * c(5) + 123852 * c(6)
                                               + 76254 * c(7) + 47602 * c(8) + 14264 * c(9)
                                               - 35354 * c(10) - 18078 * c(11)
                                               + 3078 * c(12) + 2109 * c(13) + 1116 * c(14)
                                               + 603 * c(15))
                                      - 3 * (227030 * s(1) - 365012 * s(2) + 74524 * s(3)
                                             - 328361 * s(4) - 248102 * s(5)
                                             + 215592 * s(6) + 107046 * s(7) + 40423 * s(8)
                                             + 25032 * s(9) - 49128 * s(10) - 29993 * s(11)
                                             + 5145 * s(12) + 3537 * s(13) + 1748 * s(14)
                                             + 1072 * s(15))))
                          - 240 * (-2688 * c(1) + 6303 * c(2) - 8687 * c(3) + 1939 * c(4)
                                   - 6433 * c(5) - 5887 * c(6) + 371 * c(7) - 1323 * c(8)
                                   + 1397 * c(9) + 1271 * c(10) + 200 * c(11) + 207 * c(12)
                                   + 2440) * s(1) ** 3)))


def _d6_b6(v, c, ch, s, sh):
    v2 = v * v
    v3 = v2 * v
    v4 = v2 * v2
    v5 = v4 * v
    return (v * (4 * (2852497 * v4 + 170640 * v2 - 207720) * c(1)
                 + (2064158 * v4 - 2922480 * v2 + 223920) * c(2)
                 + 720 * (586 * c(3) - 1710 * c(4) + 1310 * c(5) + 560 * c(6) - 408 * c(7)
                          + 1504 * c(8) - 484 * c(9) - 912 * c(10) + 70 * c(11)
                          - 178 * c(12) + 74 * c(13) + 121 * c(14) + 6 * c(15)
                          + 11 * c(16))
                 + v * (v * (8 * (485010 - 519679 * v2) * c(3)
                             + 240 * (20686 * c(4) - 12039 * c(5) + 4270 * c(6)
                                      - 14162 * c(7) - 14606 * c(8) + 6470 * c(9)
                                      + 4182 * c(10) + 1427 * c(11)
                                      - 7 * (-178 * c(12) + 93 * c(13) + 69 * c(14)
                                             + 8 * c(15)) - 41 * c(16))
                             + v * (2 * v * (110100480 * v * (210 * c(2) + 42 * c(4)
                                                              + 2 * c(6) + 175)
                                             * sh(1) ** 9 * ch(1) ** 11
                                             - 585830 * c(4) - 1144400 * c(5)
                                             - 249340 * c(6) + 1098208 * c(7)
                                             + 519396 * c(8) - 196056 * c(9)
                                             - 133908 * c(10) - 82040 * c(11)
                                             - 35842 * c(12) + 22516 * c(13)
                                             + 12929 * c(14) + 1894 * c(15) + 1019 * c(16))
                                    + 3 * (1368670 * s(1) - 1910495 * s(2) + 3490840 * s(3)
                                           + 1317326 * s(4) + 149620 * s(5) + 522816 * s(6)
                                           - 1381824 * s(7) - 805504 * s(8) + 337776 * s(9)
                                           + 212736 * s(10) + 109796 * s(11)
                                           + 61986 * s(12) - 35824 * s(13) - 22679 * s(14)
                                           - 3050 * s(15) - 1849 * s(16))))
                        - 2400 * (4366 * c(1) - 4746 * c(2) + 4156 * c(3) - 6806 * c(4)
                                  - 2270 * c(5) - 2207 * c(6) - 3446 * c(7) + 1146 * c(8)
                                  + 572 * c(9) + 557 * c(10) + 544 * c(11) + 38 * c(12)
                                  + 38 * c(13) - 654) * s(1) ** 3))
            - 2 * (227863 * v5 + 369240 * v3 - 105480 * v - 75600 * s(1) - 6300 * s(2)
                   + 56700 * s(3) - 80640 * s(4) + 69300 * s(5) + 70560 * s(6)
                   - 80640 * s(7) + 70560 * s(8) - 5040 * s(9) - 80640 * s(10)
                   + 13860 * s(11) - 5040 * s(12) + 1260 * s(13) + 13860 * s(14)
                   + 1260 * s(16)))


def _d6_b7(v, c, ch, s, sh):
    v2 = v * v
    v3 = v2 * v
    v4 = v2 * v2
    v5 = v4 * v
    return (v * ((468896 * v4 - 2845950 * v2 + 504540) * c(1)
                 + (3794666 * v4 + 3508410 * v2 - 424260) * c(2)
                 + 180 * (-3359 * c(3) + 6514 * c(4) - 5660 * c(5) + 1975 * c(6)
                          + 8736 * c(7) - 3088 * c(8) + 88 * c(9) - 711 * c(10)
                          - 3340 * c(11) + 526 * c(12) + 487 * c(13) + 133 * c(14)
                          + 238 * c(15) + 4 * c(16) + 7 * c(17))
                 + v * (v * (6 * (218182 * v2 + 75025) * c(3)
                             - 30 * (-48938 * c(4) - 205188 * c(5) + 189209 * c(6)
                                     + 123872 * c(7) + 9360 * c(8) + 34024 * c(9)
                                     - 47753 * c(10) - 37460 * c(11) + 4522 * c(12)
                                     + 2997 * c(13) + 2499 * c(14) + 1846 * c(15)
                                     + 68 * c(16) + 49 * c(17))
                             + v * (2 * v * (31457280 * v
                                             * (49 * (25 * c(1) + 9 * c(3) + c(5)) + c(7))
                                             * sh(1) ** 9 * ch(1) ** 11
                                             - 3244536 * c(4) - 1062160 * c(5)
                                             + 806275 * c(6) + 541016 * c(7)
                                             + 436792 * c(8) + 145188 * c(9)
                                             - 269891 * c(10) - 141460 * c(11)
                                             + 11496 * c(12) + 10442 * c(13)
                                             + 10763 * c(14) + 5913 * c(15) + 274 * c(16)
                                             + 147 * c(17))
                                    - 5461475 * s(1) + 9728100 * s(2) - 1651927 * s(3)
                                    + 8272210 * s(4) + 5719296 * s(5) - 4891402 * s(6)
                                    - 2271864 * s(7) - 1253544 * s(8) - 729384 * s(9)
                                    + 1169646 * s(10) + 708816 * s(11) - 69694 * s(12)
                                    - 53079 * s(13) - 51572 * s(14) - 31759 * s(15)
                                    - 1350 * s(16) - 812 * s(17)))
                        - 400 * (-17068 * c(1) + 33671 * c(2) - 46168 * c(3) + 9411 * c(4)
                                 - 34507 * c(5) - 29117 * c(6) + 423 * c(7) - 7921 * c(8)
                                 + 7213 * c(9) + 6135 * c(10) + 1367 * c(11) + 1363 * c(12)
                                 + 36 * c(13) + 35 * c(14) + 14143) * s(1) ** 3))
            - 4 * (-2116147 * v5 + 59850 * v3 + 134820 * v + 5775 * s(1) - 26775 * s(2)
                   - 30345 * s(3) + 67200 * s(4) - 17640 * s(5) - 17745 * s(6)
                   + 70560 * s(7) - 30240 * s(8) - 17640 * s(9) + 9135 * s(10)
                   - 30240 * s(11) + 3360 * s(12) + 9135 * s(13) + 105 * s(14)
                   + 3360 * s(15) + 105 * s(17)))


# ------------------------------------------------------------- assembly ---

#: per family: (denominator prefactor, 7 numerator (prefactor, core) pairs or None)
CLOSED_FORMS = {
    0: (
        TrigPrefactor(F(-4096), 2, 12, 0),
        ((TrigPrefactor(F(1), 0, 0, 0), _d0_b1),
         (TrigPrefactor(F(1), 0, 0, 0), _d0_b2),
         (TrigPrefactor(F(1), 0, 0, 0), _d0_b3),
         (TrigPrefactor(F(1), 0, 0, 0), _d0_b4),
         (TrigPrefactor(F(1), 0, 0, 0), _d0_b5),
         (TrigPrefactor(F(1), 0, 0, 0), _d0_b6),
         (TrigPrefactor(F(1), 0, 0, 0), _d0_b7)),
    ),
    1: (
        TrigPrefactor(F(-4194304), 4, 21, 1),
        ((TrigPrefactor(F(4, 14175), 1, 9, 0), _d1_b1),
         (TrigPrefactor(F(8, 14175), 1, 9, 0), _d1_b2),
         (TrigPrefactor(F(4, 14175), 1, 9, 0), _d1_b3),
         (TrigPrefactor(F(8, 14175), 1, 9, 0), _d1_b4),
         (TrigPrefactor(F(4, 14175), 1, 9, 0), _d1_b5),
         (TrigPrefactor(F(16, 14175), 1, 9, 0), _d1_b6),
         (TrigPrefactor(F(-8, 14175), 1, 9, 0), _d1_b7)),
    ),
    2: (
        TrigPrefactor(F(2147483648), 6, 27, 3),
        ((TrigPrefactor(F(2048, 945), 2, 15, 0), _d2_b1),
         (TrigPrefactor(F(2048, 315), 2, 15, 0), _d2_b2),
         (TrigPrefactor(F(4096, 315), 2, 15, 0), _d2_b3),
         (TrigPrefactor(F(2048, 945), 2, 15, 0), _d2_b4),
         (TrigPrefactor(F(2048, 315), 2, 15, 0), _d2_b5),
         (TrigPrefactor(F(2048, 315), 2, 15, 0), _d2_b6),
         (TrigPrefactor(F(-4096, 945), 2, 15, 0), _d2_b7)),
    ),
    3: (
        TrigPrefactor(F(824633720832), 8, 30, 6),
        ((TrigPrefactor(F(262144, 5), 3, 18, 1), _d3_b1),
         (TrigPrefactor(F(-4194304, 5), 3, 18, 3), _d3_b2),
         (TrigPrefactor(F(1572864, 5), 3, 18, 1), _d3_b3),
         (TrigPrefactor(F(-4194304, 5), 3, 18, 3), _d3_b4),
         (TrigPrefactor(F(262144, 5), 3, 18, 1), _d3_b5),
         (TrigPrefactor(F(-4194304, 5), 3, 18, 3), _d3_b6),
         (TrigPrefactor(F(524288, 5), 3, 18, 1), _d3_b7)),
    ),
    4: (
        TrigPrefactor(F(-316659348799488), 10, 30, 10),
        ((TrigPrefactor(F(100663296), 4, 18, 3), _d4_b1),
         (TrigPrefactor(F(-100663296), 4, 18, 3), _d4_b2),
         (TrigPrefactor(F(201326592), 4, 18, 3), _d4_b3),
         (TrigPrefactor(F(-100663296), 4, 18, 3), _d4_b4),
         (TrigPrefactor(F(100663296), 4, 18, 3), _d4_b5),
         (TrigPrefactor(F(-100663296), 4, 18, 3), _d4_b6),
         (TrigPrefactor(F(201326592), 4, 18, 3), _d4_b7)),
    ),
    5: (
        TrigPrefactor(F(-151996487423754240), 12, 27, 15),
        ((TrigPrefactor(F(-7247757312), 5, 15, 6), _d5_b1),
         (TrigPrefactor(F(2415919104), 5, 15, 6), _d5_b2),
         (TrigPrefactor(F(-4831838208), 5, 15, 6), _d5_b3),
         None,
         None,
         (TrigPrefactor(F(2415919104), 5, 15, 6), _d5_b6),
         (TrigPrefactor(F(-4831838208), 5, 15, 6), _d5_b7)),
    ),
    6: (
        # tabulated as 52183852646400 v^14 sin^21(v); rewritten with
        # sin v = 2 sin(v/2) cos(v/2) so the common half-angle factors cancel
        TrigPrefactor(F(52183852646400 * 2 ** 21), 14, 21, 21),
        ((TrigPrefactor(F(-3478923509760), 6, 12, 10), _d6_b1),
         (TrigPrefactor(F(3478923509760), 6, 12, 10), _d6_b2),
         (TrigPrefactor(F(-3478923509760), 6, 12, 10), _d6_b3),
         (TrigPrefactor(F(17394617548800), 6, 12, 10), _d6_b4),
         (TrigPrefactor(F(-17394617548800), 6, 12, 10), _d6_b5),
         (TrigPrefactor(F(3478923509760), 6, 12, 10), _d6_b6),
         (TrigPrefactor(F(-3478923509760), 6, 12, 10), _d6_b7)),
    ),
}

#: v->0 vanishing order of each family's denominator (before cancellation)
DENOMINATOR_ZERO_ORDER = {i: CLOSED_FORMS[i][0].vanish_order for i in range(7)}

#: residual vanishing order after the common prefactor is cancelled; this is
#: the exponent m in the precision budget bits ~ work + m*log2(1/v) + guard
RESIDUAL_ZERO_ORDER = {
    i: CLOSED_FORMS[i][0].vanish_order
    - min(p.vanish_order for p, _ in (n for n in CLOSED_FORMS[i][1] if n is not None))
    for i in range(7)
}
