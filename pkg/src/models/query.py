"""Selector-based description of one information functional."""
from ._compat import StrEnum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .distribution import Selector
from .system import Stream


class InfoForm(StrEnum):
    ENTROPY = "entropy"
    MUTUAL_INFORMATION = "mutual_information"
    DIRECTED_INFORMATION = "directed_information"


class StreamLag(BaseModel):
    """A stream taken up to time i - lag in the i-th term."""
    model_config = ConfigDict(frozen=True)

    stream: Stream
    lag: int = Field(default=0, ge=0, le=1)


class InfoQuery(BaseModel):
    """
    One member of the entropy / mutual-information / directed-information family.

    directed_information: sum_{i=1..k} I(src^{i-lag}; dst_i | dst^{i-1}, conds^{i-lag_c}, static)
    mutual_information:   I(src^{k-lag}; dst^k | static), per-step terms by the chain rule over dst
    entropy:              H(dst^k | static), per-step terms H(dst_i | dst^{i-1}, static)

    k is ``horizon_override`` or the distribution's horizon. The message stream M
    always selects x_0 regardless of time index.
    """
    model_config = ConfigDict(frozen=True)

    form: InfoForm
    src: Optional[StreamLag] = None
    dst: Stream
    causal_conditions: tuple[StreamLag, ...] = ()
    static_condition: Selector = Field(default_factory=Selector)
    horizon_override: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_streams(self) -> "InfoQuery":
        if self.form != InfoForm.ENTROPY and self.src is None:
            raise ValueError(f"{self.form} needs a source stream")
        streams = [self.dst] + [c.stream for c in self.causal_conditions]
        if self.src is not None:
            streams.append(self.src.stream)
        if len(set(streams)) != len(streams):
            raise ValueError("source, destination and causal-condition streams must be distinct")
        return self

    def formula(self) -> str:
        """Machine-readable defining sum."""
        def seq(stream: Stream, upto: str) -> str:
            return "x_0" if stream == Stream.M else f"{stream.value.lower()}^{{{upto}}}"

        k = "n" if self.horizon_override is None else str(self.horizon_override)
        static = self.static_condition.describe() if self.static_condition else ""
        if self.form == InfoForm.ENTROPY:
            cond = f" | {static}" if static else ""
            return f"H({seq(self.dst, k)}{cond})"
        src = seq(self.src.stream, k if self.src.lag == 0 else f"{k}-1")
        if self.form == InfoForm.MUTUAL_INFORMATION:
            cond = f" | {static}" if static else ""
            return f"I({src} ; {seq(self.dst, k)}{cond})"
        src_i = seq(self.src.stream, "i" if self.src.lag == 0 else "i-1")
        dst = self.dst.value.lower()
        conds = [f"{dst}^{{i-1}}"]
        conds += [seq(c.stream, "i" if c.lag == 0 else "i-1") for c in self.causal_conditions]
        if static:
            conds.append(static)
        return f"sum_{{i=1..{k}}} I({src_i} ; {dst}_i | {', '.join(conds)})"
