"""Catalog-level definitions of the verified identities."""
from dataclasses import dataclass, field
from typing import Optional

from src.models.report import IdentityId
from src.services.info import catalog as q


@dataclass(frozen=True)
class AuxiliaryDefinition:
    """lhs label = sum of rhs labels (rhs entries prefixed with '-' are subtracted)."""
    name: str
    lhs: str
    rhs: tuple[str, ...]
    requires_deterministic_encoder: bool = False


@dataclass(frozen=True)
class IdentityDefinition:
    identity_id: IdentityId
    statement: str
    lhs: str
    rhs: tuple[str, ...]
    requires_deterministic_encoder: bool
    is_inequality: bool = False
    gap: Optional[str] = None
    auxiliary: tuple[AuxiliaryDefinition, ...] = field(default_factory=tuple)


IDENTITIES: tuple[IdentityDefinition, ...] = (
    IdentityDefinition(
        identity_id=IdentityId.LEMMA1,
        statement="I(x_0; e^n) = I(x^n -> e^n)",
        lhs=q.MI_M_E,
        rhs=(q.DI_X_E,),
        requires_deterministic_encoder=True,
        auxiliary=(
            AuxiliaryDefinition("entropy route H(e^n) - H(e^n|x_0)", q.MI_M_E, (q.H_E, "-" + q.H_E_GIVEN_M)),
        ),
    ),
    IdentityDefinition(
        identity_id=IdentityId.LEMMA2,
        statement="I(y^n -> e^n) = I(e^n; x_0) + I(y^n -> e^n | x_0)",
        lhs=q.DI_Y_E,
        rhs=(q.MI_M_E, q.DI_Y_E_GIVEN_M),
        requires_deterministic_encoder=False,
    ),
    IdentityDefinition(
        identity_id=IdentityId.THEOREM1,
        statement="I(y^n -> e^n) = I(x^n -> e^n) + I(y^n -> e^n | x_0)",
        lhs=q.DI_Y_E,
        rhs=(q.DI_X_E, q.DI_Y_E_GIVEN_M),
        requires_deterministic_encoder=True,
    ),
    IdentityDefinition(
        identity_id=IdentityId.THEOREM2,
        statement="I(x^n -> y^n) >= I(x^{n-1} -> e^{n-1}) + I(e^{n-1} -> y^n), gap I(y^n; x_0 | e^{n-1})",
        lhs=q.DI_X_Y,
        rhs=(q.DI_X_E_PREV, q.DDI_E_Y),
        requires_deterministic_encoder=True,
        is_inequality=True,
        gap=q.MI_Y_M_GIVEN_E_PREV,
        auxiliary=(
            AuxiliaryDefinition(
                "I(x^n -> y^n) = I(x_0; y^n) + I(e^{n-1}; x_0 | y^n) + I(e^{n-1} -> y^n)",
                q.DI_X_Y, (q.MI_M_Y, q.MI_E_PREV_M_GIVEN_Y, q.DDI_E_Y),
                requires_deterministic_encoder=True,
            ),
            AuxiliaryDefinition(
                "I(x_0; y^n) + I(e^{n-1}; x_0 | y^n) = I(x_0; e^{n-1}) + I(y^n; x_0 | e^{n-1})",
                q.MI_M_Y, ("-" + q.MI_E_PREV_M_GIVEN_Y, q.MI_M_E_PREV, q.MI_Y_M_GIVEN_E_PREV),
            ),
            AuxiliaryDefinition(
                "I(x_0; e^{n-1}) = I(x^{n-1} -> e^{n-1})",
                q.MI_M_E_PREV, (q.DI_X_E_PREV,),
                requires_deterministic_encoder=True,
            ),
        ),
    ),
    IdentityDefinition(
        identity_id=IdentityId.THEOREM3,
        statement="I(e^{n-1} -> x^n) = I(y^{n-1} -> x^n) + I(e^{n-1} -> x^n || y^{n-1})",
        lhs=q.DDI_E_X,
        rhs=(q.DDI_Y_X, q.CCDI_E_X_Y),
        requires_deterministic_encoder=False,
        auxiliary=(
            AuxiliaryDefinition(
                "statement form I(e^n -> x^n || y^{n-1}) against the derived form",
                q.CCDI_E_X_Y_STATEMENT, (q.CCDI_E_X_Y,),
            ),
        ),
    ),
    IdentityDefinition(
        identity_id=IdentityId.MASSEY_CONSERVATION,
        statement="I(x^n; y^n) = I(x^n -> y^n) + sum_i I(y^{i-1}; x_i | x^{i-1})",
        lhs=q.MI_X_Y,
        rhs=(q.DI_X_Y, q.DDI_Y_X),
        requires_deterministic_encoder=False,
    ),
    IdentityDefinition(
        identity_id=IdentityId.MASSEY_INEQUALITY,
        statement="I(x^n; y^n) >= I(x^n -> y^n)",
        lhs=q.MI_X_Y,
        rhs=(q.DI_X_Y,),
        requires_deterministic_encoder=False,
        is_inequality=True,
    ),
)

IDENTITY_BY_ID = {d.identity_id: d for d in IDENTITIES}
