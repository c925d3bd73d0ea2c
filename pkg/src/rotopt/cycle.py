"""Driving-cycle ingestion and the longitudinal vehicle model.

Converts a speed-vs-time trace into motor-shaft operating points
(torque, speed, estimated electrical power) using aerodynamic drag,
rolling resistance, and drivetrain inertia.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (CycleFormatError, NegativeSpeedError,
                     NonMonotoneTimeError)

KMH_TO_MS = 1.0 / 3.6


@dataclass(frozen=True)
class VehicleParams:
    """Longitudinal vehicle model parameters (SI units)."""
    drag_coefficient: float
    frontal_area: float          # m^2
    rolling_resistance_coeff: float
    total_mass: float            # kg
    wheel_radius: float          # m
    gear_ratio: float
    gear_efficiency: float       # fraction (0, 1]
    moment_of_inertia: float     # kg m^2, drivetrain inertia referred to the wheel
    air_density: float = 1.2     # kg/m^3
    gravity: float = 9.81        # m/s^2

    def __post_init__(self):
        for name in ("drag_coefficient", "frontal_area", "rolling_resistance_coeff",
                     "total_mass", "wheel_radius", "gear_ratio", "gear_efficiency",
                     "moment_of_inertia", "air_density", "gravity"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"VehicleParams.{name} must be strictly positive")
        if self.gear_efficiency > 1.0:
            raise ValueError("gear_efficiency must be <= 1")


@dataclass(frozen=True)
class DrivingCycle:
    """Speed-vs-time trace with strictly increasing time stamps."""
    times: np.ndarray    # s
    speeds: np.ndarray   # m/s

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.speeds, dtype=float)
        if t.ndim != 1 or t.shape != v.shape or t.size == 0:
            raise CycleFormatError("cycle needs matching 1-D time and speed arrays")
        if t.size > 1 and np.any(np.diff(t) <= 0.0):
            raise NonMonotoneTimeError("cycle time stamps must be strictly increasing")
        if np.any(v < 0.0):
            raise NegativeSpeedError("cycle speeds must be >= 0")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "speeds", v)

    def __len__(self):
        return self.times.size


@dataclass(frozen=True)
class OperatingPoint:
    """Motor-shaft sample: signed torque, mechanical speed, estimated electrical power."""
    torque: float            # N m (signed)
    speed: float             # rad/s mechanical (>= 0)
    electrical_power: float  # W (signed estimate)

    def __post_init__(self):
        if self.speed < 0.0:
            raise ValueError("operating-point speed must be >= 0")

    @property
    def mechanical_power(self) -> float:
        return self.torque * self.speed


_SPEED_UNITS = {"ms": 1.0, "m/s": 1.0, "mps": 1.0,
                "kmh": KMH_TO_MS, "km/h": KMH_TO_MS, "kph": KMH_TO_MS}


def _speed_factor(header_field: str) -> float:
    """Unit conversion factor from a header token like 'speed_kmh'."""
    token = header_field.strip().lower()
    for key, factor in _SPEED_UNITS.items():
        if token.endswith(key):
            return factor
    raise CycleFormatError(f"cannot infer speed unit from header field {header_field!r}")


def load_cycle(path) -> DrivingCycle:
    """Load a two-column (time, speed) CSV.

    A one-line header declares units (e.g. ``time_s,speed_kmh``); headerless
    files are taken as seconds and m/s.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"cycle file not found: {path}")
    times, speeds = [], []
    factor = 1.0
    with path.open(newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) < 2:
                raise CycleFormatError(f"{path}:{lineno}: expected two columns, got {row!r}")
            try:
                t, v = float(row[0]), float(row[1])
            except ValueError:
                if lineno == 1:
                    factor = _speed_factor(row[1])
                    continue
                raise CycleFormatError(f"{path}:{lineno}: malformed row {row!r}") from None
            times.append(t)
            speeds.append(v * factor)
    if not times:
        raise CycleFormatError(f"{path}: no samples")
    return DrivingCycle(np.array(times), np.array(speeds))


def accelerations(cycle: DrivingCycle) -> np.ndarray:
    """Acceleration trace: central differences, one-sided at the endpoints."""
    t, v = cycle.times, cycle.speeds
    if len(cycle) == 1:
        return np.zeros(1)
    return np.gradient(v, t)


def cycle_to_operating_points(cycle: DrivingCycle, vp: VehicleParams,
                              est_drive_efficiency: float = 0.9) -> list[OperatingPoint]:
    """Run the longitudinal model over every cycle sample.

    Tractive force = drag + rolling resistance (only while moving) + inertia;
    the drivetrain inertia term J*a/r is added on the wheel side, and the gear
    efficiency is applied directionally (divide when motoring, multiply when
    regenerating).  ``est_drive_efficiency`` is the flat motor+inverter
    efficiency estimate used only to size the electrical-power weights.
    """
    if len(cycle) == 0:
        raise CycleFormatError("empty cycle")
    v = cycle.speeds
    a = accelerations(cycle)
    moving = v > 0.0
    drag = 0.5 * vp.air_density * vp.drag_coefficient * vp.frontal_area * v ** 2
    rolling = vp.rolling_resistance_coeff * vp.total_mass * vp.gravity * moving
    tractive = drag + rolling + vp.total_mass * a
    wheel_torque = tractive * vp.wheel_radius + vp.moment_of_inertia * a / vp.wheel_radius
    motoring = wheel_torque >= 0.0
    motor_torque = np.where(
        motoring,
        wheel_torque / (vp.gear_ratio * vp.gear_efficiency),
        wheel_torque * vp.gear_efficiency / vp.gear_ratio,
    )
    motor_speed = v * vp.gear_ratio / vp.wheel_radius
    p_mech = motor_torque * motor_speed
    p_el = np.where(p_mech >= 0.0, p_mech / est_drive_efficiency,
                    p_mech * est_drive_efficiency)
    return [OperatingPoint(float(T), float(w), float(p))
            for T, w, p in zip(motor_torque, motor_speed, p_el)]


def dump_operating_points(path, cycle: DrivingCycle, points: list[OperatingPoint]) -> None:
    """Write (time, speed_rad_s, torque_Nm) rows for inspection."""
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["time_s", "speed_rad_s", "torque_Nm"])
        for t, op in zip(cycle.times, points):
            writer.writerow([f"{t:.6g}", f"{op.speed:.10g}", f"{op.torque:.10g}"])
