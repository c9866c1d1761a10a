//! CSV exports. Floats are written in scientific notation with 17
//! significant digits so that every double round-trips.

use std::io::{self, Write};

use zccs_core::exactphase::UnitRoots;
use zccs_core::{cyclotomic_poly, CodeSet, CorrelationProfile};

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

/// One row per entry: `code,sequence,index,phase,re,im`.
pub fn write_code_set_csv<W: Write>(set: &CodeSet, mut out: W) -> io::Result<()> {
    let roots = UnitRoots::new(set.order());
    writeln!(out, "code,sequence,index,phase,re,im")?;
    for (k, code) in set.codes().iter().enumerate() {
        for (l, seq) in code.sequences().iter().enumerate() {
            for (i, &ph) in seq.phases().iter().enumerate() {
                let (re, im) = roots.root(ph);
                writeln!(out, "{k},{l},{i},{ph},{},{}", float(re), float(im))?;
            }
        }
    }
    Ok(())
}

/// One row per shift: `tau,re,im,exact_zero`.
pub fn write_profile_csv<W: Write>(profile: &CorrelationProfile, mut out: W) -> io::Result<()> {
    writeln!(out, "tau,re,im,exact_zero")?;
    let mut iter = profile.iter().peekable();
    let Some((_, first)) = iter.peek() else {
        return Ok(());
    };
    let order = first.order();
    let roots = UnitRoots::new(order);
    let phi = cyclotomic_poly(order);
    for (tau, value) in iter {
        let (re, im) = roots.eval(value);
        writeln!(out, "{tau},{},{},{}", float(re), float(im), phi.annihilates(value))?;
    }
    Ok(())
}
