//! Sweep presets that regenerate the datasets behind the published figures.

use crate::sweep::{AxisName, AxisValues, Quantity, SweepSpec};

/// Figures with a preset.
pub const FIGURES: std::ops::RangeInclusive<u8> = 2..=19;

fn range(lo: f64, hi: f64, steps: usize) -> AxisValues {
    AxisValues::Range { lo, hi, steps }
}

fn at(x: f64) -> AxisValues {
    AxisValues::Scalar(x)
}

fn spec(q: Quantity, gamma: AxisValues, n: AxisValues) -> SweepSpec {
    SweepSpec::new(q, gamma, Some(n))
}

/// Sweep for figure `number`, or `None` outside [`FIGURES`].
pub fn figure_sweep(number: u8) -> Option<SweepSpec> {
    use Quantity::*;
    let s = match number {
        // vertex angle surfaces for 1 ≤ n ≤ 2
        2 => spec(Angle, range(1.0, 10.0, 200), range(1.0, 2.0, 21)),
        3 => spec(Angle, range(1.0, 50.0, 200), range(1.0, 2.0, 21)).major(AxisName::N),
        // isosceles extreme against the degree
        4 => spec(Angle, at(1.0), range(1.0, 2.0, 101)),
        // n ≥ 2, then extended below γ = 1
        5 => spec(Angle, range(1.0, 10.0, 200), range(2.0, 20.0, 37)),
        6 => spec(Angle, range(0.1, 10.0, 200), range(2.0, 20.0, 37)),
        7 => spec(Angle, at(1.0), range(2.0, 100.0, 197)),
        8 => spec(Angle, range(0.1, 5.0, 200), at(1e6)),
        9 => SweepSpec::new(Ncrit, range(1.01, 1.99, 99), None),
        10 => spec(Angle, range(0.1, 3.0, 146), range(-30.0, -0.1, 150)),
        11 => spec(Angle, range(0.1, 3.0, 146), range(-5.0, -1.0, 5)).major(AxisName::N),
        12 => spec(Angle, at(1.0), range(-30.0, -1.0, 100)),
        13 => spec(Angle, range(0.1, 3.0, 146), at(-1e6)),
        14 => spec(AreaFixedLeg, range(1.0, 10.0, 100), range(1.0, 20.0, 77)),
        15 => spec(AreaFixedLeg, at(1.0), range(1.0, 100.0, 199)),
        16 => spec(
            AreaFixedPerimeter,
            range(1.0, 10.0, 100),
            range(1.0, 20.0, 77),
        ),
        17 => spec(
            AreaFixedPerimeter,
            range(1.0, 100.0, 200),
            range(2.0, 50.0, 25),
        ),
        18 => spec(AreaFixedLeg, range(1.0, 1.99, 100), range(-30.0, -0.1, 150)),
        19 => spec(AreaFixedPerimeter, range(1.0, 1.99, 100), at(-1e6)),
        _ => return None,
    };
    Some(s)
}
