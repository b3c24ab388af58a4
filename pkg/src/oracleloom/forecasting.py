"""Daily-sentiment forecasting: moving average, AR, and ARIMA.

Estimators are deliberately plain: OLS normal equations with a tiny ridge
for AR, conditional sum of squares minimized by Nelder-Mead for ARIMA.
Short series near the iteration cap keep their best-found parameters and
carry a ``converged`` flag instead of failing.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping, Sequence

import numpy as np
from scipy.optimize import minimize

from .errors import LengthMismatch, SingularDesign, TooShort, ValidationError

RIDGE = 1e-10
NM_MAX_ITER = 500
NM_TOL = 1e-8
DEFAULT_HORIZON = 3

# MSEs below this are indistinguishable from exact fits; ranking treats
# them as ties so float dust never reorders models.
MSE_NOISE_FLOOR = 1e-12


class ModelId(Enum):
    MA = "ma"
    AR = "ar"
    ARIMA = "arima"


@dataclass(frozen=True)
class Series:
    start: dt.date
    values: tuple[float, ...]
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ARModel:
    p: int
    intercept: float
    coefficients: tuple[float, ...]
    fitted_on: int

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.p:
            raise ValidationError(
                f"AR({self.p}) needs {self.p} coefficients, got {len(self.coefficients)}"
            )

    def params_obj(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "intercept": self.intercept,
            "coefficients": list(self.coefficients),
        }


@dataclass(frozen=True)
class ARIMAModel:
    p: int
    d: int
    q: int
    ar_coefficients: tuple[float, ...]
    ma_coefficients: tuple[float, ...]
    intercept: float
    converged: bool = True

    def __post_init__(self) -> None:
        if self.d > 2 or self.d < 0:
            raise ValidationError(f"differencing order out of range: d={self.d}")
        if len(self.ar_coefficients) != self.p or len(self.ma_coefficients) != self.q:
            raise ValidationError("coefficient counts must match (p, q)")

    def params_obj(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "d": self.d,
            "q": self.q,
            "ar_coefficients": list(self.ar_coefficients),
            "ma_coefficients": list(self.ma_coefficients),
            "intercept": self.intercept,
            "converged": self.converged,
        }


@dataclass(frozen=True)
class ForecastResult:
    model_id: ModelId
    params: Mapping[str, Any]
    horizon: int
    predictions: tuple[float, ...]
    mse: float | None = None

    def __post_init__(self) -> None:
        if len(self.predictions) != self.horizon:
            raise ValidationError("predictions length must equal horizon")
        if self.mse is not None and self.mse < 0:
            raise ValidationError("mse cannot be negative")
        object.__setattr__(self, "params", dict(self.params))

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {
            "model_id": self.model_id.value,
            "params": dict(self.params),
            "horizon": self.horizon,
            "predictions": [float(v) for v in self.predictions],
        }
        if self.mse is not None:
            obj["mse"] = float(self.mse)
        return obj


# --- moving average --------------------------------------------------------


def moving_average_forecast(series: Series, window: int, horizon: int) -> ForecastResult:
    """Mean of the last ``window`` values, applied recursively per step."""
    if window < 1 or horizon < 1:
        raise ValidationError("window and horizon must be >= 1")
    if len(series) < window:
        raise TooShort(f"need {window} observations, have {len(series)}")
    buf = list(series.values)
    preds: list[float] = []
    for _ in range(horizon):
        nxt = sum(buf[-window:]) / window
        preds.append(nxt)
        buf.append(nxt)
    return ForecastResult(ModelId.MA, {"window": window}, horizon, tuple(preds))


# --- autoregression --------------------------------------------------------


def _ar_design(values: Sequence[float], p: int, with_intercept: bool):
    rows = len(values) - p
    cols = p + (1 if with_intercept else 0)
    x = np.empty((rows, cols))
    y = np.empty(rows)
    for r, t in enumerate(range(p, len(values))):
        c = 0
        if with_intercept:
            x[r, 0] = 1.0
            c = 1
        for i in range(1, p + 1):
            x[r, c + i - 1] = values[t - i]
        y[r] = values[t]
    return x, y


def _solve_ols(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    xtx = x.T @ x
    xtx[np.diag_indices_from(xtx)] += RIDGE
    try:
        return np.linalg.solve(xtx, x.T @ y)
    except np.linalg.LinAlgError as exc:
        raise SingularDesign(str(exc)) from None


def fit_ar(series: Series, p: int, with_intercept: bool = True) -> ARModel:
    if p < 1:
        raise ValidationError(f"lag order must be >= 1, got {p}")
    need = p + 2 + (1 if with_intercept else 0)
    if len(series) < need:
        raise TooShort(f"AR({p}) needs {need} observations, have {len(series)}")
    x, y = _ar_design(series.values, p, with_intercept)
    beta = _solve_ols(x, y)
    if with_intercept:
        intercept, coefs = float(beta[0]), tuple(float(b) for b in beta[1:])
    else:
        intercept, coefs = 0.0, tuple(float(b) for b in beta)
    return ARModel(p=p, intercept=intercept, coefficients=coefs, fitted_on=len(y))


def forecast_ar(model: ARModel, series: Series, horizon: int) -> ForecastResult:
    if horizon < 1:
        raise ValidationError("horizon must be >= 1")
    if len(series) < model.p:
        raise TooShort(f"need {model.p} trailing observations, have {len(series)}")
    buf = list(series.values)
    preds: list[float] = []
    for _ in range(horizon):
        nxt = model.intercept
        for i, coef in enumerate(model.coefficients, start=1):
            nxt += coef * buf[-i]
        preds.append(nxt)
        buf.append(nxt)
    return ForecastResult(ModelId.AR, model.params_obj(), horizon, tuple(preds))


# --- ARIMA -----------------------------------------------------------------


def _difference(values: Sequence[float], d: int) -> list[float]:
    w = list(values)
    for _ in range(d):
        w = [w[i] - w[i - 1] for i in range(1, len(w))]
    return w


def _css_innovations(
    w: Sequence[float], c: float, ar: Sequence[float], ma: Sequence[float]
) -> np.ndarray:
    """One-step innovations with pre-sample values pinned to zero."""
    p, q = len(ar), len(ma)
    n = len(w)
    e = np.zeros(n)
    for t in range(p, n):
        pred = c
        for i in range(1, p + 1):
            pred += ar[i - 1] * w[t - i]
        for j in range(1, q + 1):
            if t - j >= 0:
                pred += ma[j - 1] * e[t - j]
        e[t] = w[t] - pred
    return e


def fit_arima(series: Series, p: int, d: int, q: int) -> ARIMAModel:
    if p < 0 or q < 0:
        raise ValidationError("orders must be non-negative")
    if d < 0 or d > 2:
        raise ValidationError(f"differencing order out of range: d={d}")
    w = _difference(series.values, d)
    if len(w) < p + q + 2:
        raise TooShort(
            f"ARIMA({p},{d},{q}) needs {p + q + 2} differenced observations, have {len(w)}"
        )
    with_c = d == 0

    if p == 0 and q == 0:
        c = float(np.mean(w)) if with_c else 0.0
        return ARIMAModel(p, d, q, (), (), c, converged=True)

    # Start from the AR-only least-squares solution; MA terms from zero.
    if p > 0:
        x, y = _ar_design(w, p, with_c)
        beta = _solve_ols(x, y)
        if with_c:
            c0, ar0 = float(beta[0]), [float(b) for b in beta[1:]]
        else:
            c0, ar0 = 0.0, [float(b) for b in beta]
    else:
        c0 = float(np.mean(w)) if with_c else 0.0
        ar0 = []
    theta0 = ([c0] if with_c else []) + ar0 + [0.0] * q

    def unpack(theta):
        off = 0
        c = theta[0] if with_c else 0.0
        if with_c:
            off = 1
        return c, theta[off : off + p], theta[off + p :]

    def objective(theta):
        c, ar, ma = unpack(theta)
        e = _css_innovations(w, c, ar, ma)
        return float(np.sum(e[p:] ** 2))

    res = minimize(
        objective,
        np.asarray(theta0),
        method="Nelder-Mead",
        options={"maxiter": NM_MAX_ITER, "xatol": NM_TOL, "fatol": NM_TOL},
    )
    c, ar, ma = unpack([float(v) for v in res.x])
    return ARIMAModel(
        p=p,
        d=d,
        q=q,
        ar_coefficients=tuple(float(a) for a in ar),
        ma_coefficients=tuple(float(m) for m in ma),
        intercept=float(c),
        converged=bool(res.success),
    )


def forecast_arima(model: ARIMAModel, series: Series, horizon: int) -> ForecastResult:
    if horizon < 1:
        raise ValidationError("horizon must be >= 1")
    if len(series) < model.d + model.p:
        raise TooShort(
            f"need {model.d + model.p} trailing observations, have {len(series)}"
        )
    w = _difference(series.values, model.d)
    e = _css_innovations(w, model.intercept, model.ar_coefficients, model.ma_coefficients)

    wbuf = list(w)
    ebuf = list(e)
    preds_w: list[float] = []
    for _ in range(horizon):
        nxt = model.intercept
        for i, coef in enumerate(model.ar_coefficients, start=1):
            nxt += coef * wbuf[-i]
        for j, coef in enumerate(model.ma_coefficients, start=1):
            nxt += coef * ebuf[-j]
        preds_w.append(nxt)
        wbuf.append(nxt)
        ebuf.append(0.0)  # future innovations are zero

    # Undo the differencing: cumulative sums seeded from the observed tails.
    preds = preds_w
    level_tails = []
    levels = list(series.values)
    for _ in range(model.d):
        level_tails.append(levels[-1])
        levels = [levels[i] - levels[i - 1] for i in range(1, len(levels))]
    for tail in reversed(level_tails):
        acc = tail
        integrated = []
        for v in preds:
            acc = acc + v
            integrated.append(acc)
        preds = integrated
    return ForecastResult(
        ModelId.ARIMA, model.params_obj(), horizon, tuple(float(v) for v in preds)
    )


# --- truth construction and comparison -------------------------------------


def weighted_truth(
    per_source: Mapping[str, Series], weights: Mapping[str, float]
) -> Series:
    """Element-wise weighted mean over sources, renormalized to present ones."""
    if not per_source:
        raise ValidationError("no source series given")
    items = sorted(per_source.items())
    first = items[0][1]
    for sid, s in items:
        if len(s) != len(first) or s.start != first.start:
            raise LengthMismatch(f"series {sid!r} does not align with {items[0][0]!r}")
    present = {sid: weights.get(sid, 0.0) for sid, _ in items}
    total = sum(present.values())
    if total == 0:
        # no informative weights: fall back to an unweighted mean
        present = {sid: 1.0 for sid, _ in items}
        total = float(len(items))
    values = []
    for i in range(len(first)):
        acc = 0.0
        for sid, s in items:
            acc += (present[sid] / total) * s.values[i]
        values.append(acc)
    return Series(first.start, tuple(values), name="weighted_truth")


def mse(predictions: Sequence[float], actual: Sequence[float]) -> float:
    if len(predictions) != len(actual) or len(predictions) == 0:
        raise LengthMismatch(
            f"length mismatch: {len(predictions)} predictions vs {len(actual)} actual"
        )
    return sum((p - a) ** 2 for p, a in zip(predictions, actual)) / len(predictions)


def select_default_model(series_length: int) -> ModelId:
    """Pick the model family suited to the amount of history available."""
    if series_length < 1:
        raise ValidationError("series length must be >= 1")
    if series_length < 5:
        return ModelId.MA
    if series_length < 30:
        return ModelId.AR
    return ModelId.ARIMA


def default_forecast(series: Series, horizon: int = DEFAULT_HORIZON) -> ForecastResult:
    """Fit and run the default model for this series length."""
    choice = select_default_model(len(series))
    if choice is ModelId.MA:
        return moving_average_forecast(series, min(3, len(series)), horizon)
    if choice is ModelId.AR:
        return forecast_ar(fit_ar(series, 2, with_intercept=True), series, horizon)
    return forecast_arima(fit_arima(series, 1, 1, 1), series, horizon)


_TIE_ORDER = {ModelId.MA: 0, ModelId.AR: 1, ModelId.ARIMA: 2}


def compare_models(series: Series, holdout: int) -> list[ForecastResult]:
    """Backtest MA(3), AR(2), ARIMA(1,1,1) against a held-out suffix.

    Results sort ascending by MSE. MSEs under the noise floor count as
    exact ties, broken in model order MA, AR, ARIMA.
    """
    if holdout < 1:
        raise ValidationError("holdout must be >= 1")
    if len(series) < holdout + 6:
        raise TooShort(f"need {holdout + 6} observations, have {len(series)}")
    prefix = Series(series.start, series.values[:-holdout], name=series.name)
    actual = series.values[-holdout:]

    results = []
    for fr in (
        moving_average_forecast(prefix, 3, holdout),
        forecast_ar(fit_ar(prefix, 2, with_intercept=True), prefix, holdout),
        forecast_arima(fit_arima(prefix, 1, 1, 1), prefix, holdout),
    ):
        err = mse(fr.predictions, actual)
        results.append(
            ForecastResult(fr.model_id, fr.params, fr.horizon, fr.predictions, mse=err)
        )

    def rank(fr: ForecastResult):
        assert fr.mse is not None
        floored = 0.0 if fr.mse < MSE_NOISE_FLOOR else fr.mse
        return (floored, _TIE_ORDER[fr.model_id])

    return sorted(results, key=rank)
