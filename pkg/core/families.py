# Weyl群族

from enum import Enum

from .errors import InputError


class Family(Enum):
    """不可约Weyl群的族"""
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    G2 = "G2"

    @property
    def is_classical(self) -> bool:
        return self in CLASSICAL_FAMILIES

    @property
    def fixed_rank(self) -> int:
        """例外型的固定秩；经典族返回0"""
        return EXCEPTIONAL_RANKS.get(self, 0)

    @classmethod
    def parse(cls, value) -> "Family":
        """
        解析族名称

        Args:
            value: Family 实例或字符串（不区分大小写）

        Returns:
            Family
        """
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise InputError(f"未知的Weyl群族: {value!r}") from None


CLASSICAL_FAMILIES = frozenset({Family.A, Family.B, Family.C, Family.D})

EXCEPTIONAL_RANKS = {
    Family.E6: 6,
    Family.E7: 7,
    Family.E8: 8,
    Family.F4: 4,
    Family.G2: 2,
}
