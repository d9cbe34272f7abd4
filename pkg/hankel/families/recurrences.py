"""
Las 18 identidades que relacionan las familias en n (y n+1) con 2n y 2n+1

Cada identidad tiene su forma exacta impresa, variantes candidatas
(negada, y para a_{2n+1} la forma que resulta de la demostración) y su
forma reducida módulo 2.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Tuple

from hankel.exceptions import DependencyError
from hankel.models.families import FAMILY_NAMES, FamilyRow

Expr = Callable[[FamilyRow, Optional[FamilyRow]], int]

PRINTED = "printed"
NEGATED = "negated"
PROOF = "proof"


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


@dataclass(frozen=True)
class Identity:
    """Identidad de recurrencia para `family` en el índice 2n + parity"""
    number: int
    family: str
    parity: int
    # Exponente del signo impreso: (-1)^(n + sign_shift)
    sign_shift: int
    expr: Expr
    mod2: Expr
    uses_next: bool = False
    alternatives: Dict[str, Expr] = field(default_factory=dict)

    def target(self, n: int) -> int:
        return 2 * n + self.parity

    def variants(self, n: int, r: FamilyRow, r1: Optional[FamilyRow]) -> Dict[str, int]:
        """Valores de todas las variantes candidatas"""
        sign = _sign(n + self.sign_shift)
        value = sign * self.expr(r, r1)
        values = {PRINTED: value, NEGATED: -value}
        for name, alternative in self.alternatives.items():
            values[name] = sign * alternative(r, r1)
        return values

    def predict(self, n: int, r: FamilyRow, r1: Optional[FamilyRow], variant: str = PRINTED) -> int:
        return self.variants(n, r, r1)[variant]

    def predict_mod2(self, r: FamilyRow, r1: Optional[FamilyRow]) -> int:
        return self.mod2(r, r1) & 1


IDENTITIES: Tuple[Identity, ...] = (
    Identity(1, "a", 0, 1,
             lambda r, _: r.b ** 2 + 2 * r.c * r.e + 2 * r.d * r.e - r.a ** 2,
             lambda r, _: r.a + r.b),
    Identity(2, "a", 1, 1,
             lambda r, _: 2 * r.x * r.y - r.g ** 2 - r.h ** 2,
             lambda r, _: r.g + r.h,
             alternatives={PROOF: lambda r, _: -r.g ** 2 + r.h ** 2 + 2 * r.x * r.y}),
    Identity(3, "b", 0, 1,
             lambda r, _: (r.c + 2 * r.e + r.d) ** 2,
             lambda r, _: r.c + r.d),
    Identity(4, "b", 1, 1,
             lambda r, _: 2 * (r.x + r.y) ** 2,
             lambda r, _: 0),
    Identity(5, "c", 0, 0,
             lambda r, _: 2 * (r.b ** 2 + (r.c + r.e) * (r.d + r.e)),
             lambda r, _: 0),
    Identity(6, "c", 1, 0,
             lambda r, _: 4 * r.x * r.y + (r.g + r.h) ** 2,
             lambda r, _: r.g + r.h),
    Identity(7, "d", 0, 0,
             lambda r, _: 2 * r.b ** 2 + (r.c + r.e) ** 2 + (r.d + r.e) ** 2,
             lambda r, _: r.c + r.d),
    Identity(8, "d", 1, 0,
             lambda r, _: (r.x + r.y) ** 2,
             lambda r, _: r.x + r.y),
    Identity(9, "e", 0, 0,
             lambda r, _: r.b * (r.c + r.d - 2 * r.e) + r.a * (r.c + r.d + 2 * r.e),
             lambda r, _: (r.a + r.b) * (r.c + r.d)),
    Identity(10, "e", 1, 0,
             lambda r, _: (r.g - r.h) * (r.x + r.y),
             lambda r, _: (r.g + r.h) * (r.x + r.y)),
    Identity(11, "g", 0, 0,
             lambda r, _: r.c * r.y + r.e * r.x - r.e * r.y - r.d * r.x + r.a * (r.g + r.h),
             lambda r, _: r.a * (r.g + r.h) + r.x * (r.d + r.e) + r.y * (r.c + r.e)),
    Identity(12, "g", 1, 1,
             lambda r, s: s.c * r.y + s.e * r.x - s.e * r.y - s.d * r.x + s.a * (r.g + r.h),
             lambda r, s: s.a * (r.g + r.h) + r.x * (s.d + s.e) + r.y * (s.c + s.e),
             uses_next=True),
    Identity(13, "h", 0, 0,
             lambda r, _: r.b * (r.y - r.x) + r.g * (r.c + r.e) + r.h * (r.d + r.e),
             lambda r, _: r.g * (r.c + r.e) + r.h * (r.d + r.e) + r.b * (r.x + r.y)),
    Identity(14, "h", 1, 1,
             lambda r, s: s.b * (r.y - r.x) + r.g * (s.c + s.e) + r.h * (s.d + s.e),
             lambda r, s: r.g * (s.c + s.e) + r.h * (s.d + s.e) + s.b * (r.x + r.y),
             uses_next=True),
    Identity(15, "x", 0, 0,
             lambda r, _: 2 * r.b * (r.y - r.x) + (r.g + r.h) * (r.c + r.d + 2 * r.e),
             lambda r, _: (r.g + r.h) * (r.c + r.d)),
    Identity(16, "x", 1, 1,
             lambda r, s: 2 * s.b * (r.y - r.x) + (r.g + r.h) * (s.c + s.d + 2 * s.e),
             lambda r, s: (r.g + r.h) * (s.c + s.d),
             uses_next=True),
    Identity(17, "y", 0, 1,
             lambda r, _: (r.x + r.y) * (r.c - r.d),
             lambda r, _: (r.x + r.y) * (r.c + r.d)),
    Identity(18, "y", 1, 0,
             lambda r, s: (r.x + r.y) * (s.c - s.d),
             lambda r, s: (r.x + r.y) * (s.c + s.d),
             uses_next=True),
)

IDENTITY_BY_NUMBER: Dict[int, Identity] = {identity.number: identity for identity in IDENTITIES}


@dataclass(frozen=True)
class RecurrencePrediction:
    """Valores predichos en 2n y 2n+1"""
    n: int
    even: Dict[str, int]
    odd: Dict[str, int]
    even_mod2: Dict[str, int]
    odd_mod2: Dict[str, int]


def _row(rows: Mapping[int, FamilyRow], index: int, identity: int) -> FamilyRow:
    found = rows.get(index)
    if found is None:
        raise DependencyError(
            f"Falta la fila n={index} que consume la identidad {identity}",
            {"n": index, "identity": identity},
        )
    return found


def family_recurrence(
    rows: Mapping[int, FamilyRow],
    n: int,
    variants: Optional[Mapping[int, str]] = None,
) -> RecurrencePrediction:
    """
    Predice las familias en 2n y 2n+1 a partir de las filas n y n+1

    Args:
        rows: Filas indexadas por n
        n: Índice base
        variants: Variante por número de identidad (por defecto la impresa)

    Raises:
        DependencyError: Si falta una fila requerida
    """
    variants = variants or {}
    even: Dict[str, int] = {}
    odd: Dict[str, int] = {}
    even_mod2: Dict[str, int] = {}
    odd_mod2: Dict[str, int] = {}
    for identity in IDENTITIES:
        r = _row(rows, n, identity.number)
        r1 = _row(rows, n + 1, identity.number) if identity.uses_next else None
        value = identity.predict(n, r, r1, variants.get(identity.number, PRINTED))
        parity = identity.predict_mod2(r, r1)
        if identity.parity == 0:
            even[identity.family], even_mod2[identity.family] = value, parity
        else:
            odd[identity.family], odd_mod2[identity.family] = value, parity
    return RecurrencePrediction(n, even, odd, even_mod2, odd_mod2)


def mod2_table_by_recurrence(first_row: Mapping[str, int], n_max: int) -> Dict[int, Dict[str, int]]:
    """
    Extiende las paridades desde n = 1 con las formas reducidas

    Args:
        first_row: Paridades de las nueve familias en n = 1
        n_max: Índice máximo

    Returns:
        n -> familia -> paridad, para 1 <= n <= n_max
    """
    table: Dict[int, Dict[str, int]] = {1: {name: first_row[name] & 1 for name in FAMILY_NAMES}}
    for target in range(2, n_max + 1):
        n, parity = divmod(target, 2)
        row = FamilyRow.from_values(n, table[n])
        following = FamilyRow.from_values(n + 1, table[n + 1]) if parity else None
        table[target] = {
            identity.family: identity.predict_mod2(row, following)
            for identity in IDENTITIES
            if identity.parity == parity
        }
    return table
