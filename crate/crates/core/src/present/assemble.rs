use std::collections::BTreeSet;

use crate::exec::Exec;
use crate::intersect::{EventSpec, ManifoldData};
use crate::ring::UPoly;
use crate::wrap::{skein_closure, WrapClass};

use super::generators::{
    default_delta_events, default_sphere_events, default_theta_events, delta_generator, theta_generator,
    theta_sphere_generator, to_graded, to_ungraded,
};
use super::structure::{reduce_structure_set, structure_set};
use super::{Bounds, Generator, GeneratorKind, Mode, PresentError, PresentationMatrix, Reduction, Row};

/// Descriptor entries for α, as generators with their crossing data.
fn entry_generators(m: &ManifoldData, alpha: &WrapClass) -> Vec<(Generator, Vec<EventSpec>)> {
    let thetas = m.theta_entries.iter().filter(|t| t.alpha == *alpha).map(|t| {
        let kind = GeneratorKind::Theta {
            a: t.component.clone(),
            h: t.h.clone(),
        };
        (
            Generator {
                source: alpha.clone(),
                kind,
                entry: Some(t.name.clone()),
            },
            t.events.clone(),
        )
    });
    let deltas = m.delta_entries.iter().filter(|d| d.alpha == *alpha).map(|d| {
        let kind = GeneratorKind::Delta {
            a: d.pair.0.clone(),
            b: d.pair.1.clone(),
            g: d.g.clone(),
        };
        (
            Generator {
                source: alpha.clone(),
                kind,
                entry: Some(d.name.clone()),
            },
            d.events.clone(),
        )
    });
    thetas.chain(deltas).collect()
}

fn default_events(m: &ManifoldData, g: &Generator) -> Option<Vec<EventSpec>> {
    match &g.kind {
        GeneratorKind::Theta { a, h } => default_theta_events(m, &g.source, a, h),
        GeneratorKind::Delta { a, b, g: x } => default_delta_events(m, &g.source, a, b, x),
        GeneratorKind::Sphere { s } => default_sphere_events(m, &g.source, s),
    }
}

fn evaluate(m: &ManifoldData, mode: Mode, g: Generator, events: Vec<EventSpec>) -> Result<Row, PresentError> {
    let alpha = &g.source;
    let grade = |v| if mode == Mode::Ru { to_graded(v) } else { to_ungraded(v) };
    let index = events.iter().map(|e| e.sign() as i64).sum();
    let (values, delta_tilde) = match &g.kind {
        GeneratorKind::Theta { a, .. } => (grade(&theta_generator(m, alpha, a, &events)?), None),
        GeneratorKind::Delta { a, b, g: x } => {
            let d = delta_generator(m, alpha, a, b, x, &events)?;
            (grade(&d.relation), Some(d.tilde))
        }
        GeneratorKind::Sphere { .. } => (theta_sphere_generator(m, alpha, &events)?, None),
    };
    Ok(Row {
        generator: g,
        events,
        index,
        values,
        delta_tilde,
    })
}

type Assembled = (Vec<Row>, Vec<Generator>, Vec<(Generator, Reduction)>);

fn rows_for(m: &ManifoldData, alpha: &WrapClass, mode: Mode, bounds: Bounds) -> Result<Assembled, PresentError> {
    let mut gens: Vec<(Generator, Option<Vec<EventSpec>>)> = structure_set(m, alpha, mode, bounds)
        .into_iter()
        .map(|g| (g, None))
        .collect();
    for (g, ev) in entry_generators(m, alpha) {
        match gens.iter_mut().find(|(x, _)| x.kind == g.kind) {
            Some(slot) => *slot = (g, Some(ev)),
            None => gens.push((g, Some(ev))),
        }
    }
    let explicit: Vec<_> = gens.iter().map(|(g, e)| (g.clone(), e.clone())).collect();
    let (kept, dropped) = reduce_structure_set(m, gens.into_iter().map(|(g, _)| g).collect());
    let mut rows = Vec::new();
    let mut incomplete = Vec::new();
    for g in kept {
        let given = explicit.iter().find(|(x, _)| *x == g).and_then(|(_, e)| e.clone());
        match given.or_else(|| default_events(m, &g)) {
            Some(events) => rows.push(evaluate(m, mode, g, events)?),
            None => incomplete.push(g),
        }
    }
    Ok((rows, incomplete, dropped))
}

/// Presentation matrix of the skein closure of `seeds`. Rows are the relation values of the
/// surviving generators of every class in the closure (R mode) or of every trivial-free class
/// obtained from it (R[u] mode), in class order. Classes produced by explicit smoothings outside
/// the closure are appended as extra columns.
pub fn assemble_presentation(
    m: &ManifoldData,
    seeds: &[WrapClass],
    mode: Mode,
    bounds: Bounds,
    exec: Exec,
) -> Result<PresentationMatrix, PresentError> {
    let closure = skein_closure(seeds.iter().cloned(), &m.pi1, bounds.conj, exec);
    let sources: Vec<WrapClass> = match mode {
        Mode::R => closure.members.into_iter().collect(),
        Mode::Ru => closure
            .members
            .iter()
            .map(|a| a.without_trivial())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    };
    let results = exec.map(&sources, |alpha| rows_for(m, alpha, mode, bounds));
    let mut columns: BTreeSet<WrapClass> = sources.iter().cloned().collect();
    let mut out = PresentationMatrix {
        mode,
        bounds,
        columns: Vec::new(),
        rows: Vec::new(),
        incomplete: Vec::new(),
        dropped: Vec::new(),
    };
    for r in results {
        let (rows, incomplete, dropped) = r?;
        for row in &rows {
            columns.extend(row.values.keys().cloned());
        }
        out.rows.extend(rows);
        out.incomplete.extend(incomplete);
        out.dropped.extend(dropped);
    }
    out.columns = columns.into_iter().collect();
    Ok(out)
}

/// Longest class (by number of entries, u-powers included) in a row.
pub fn row_length(values: &crate::wrap::USkeinVector) -> usize {
    values
        .iter()
        .map(|(k, c): (&WrapClass, &UPoly)| k.len() + c.u_terms().map(|(d, _)| d as usize).max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::lookup;
    use crate::wrap::render_vector;

    #[test]
    fn homotopy_sphere_has_no_relations() {
        let m = lookup("s3").unwrap();
        let p = assemble_presentation(
            &m,
            &[m.wrap("<1>").unwrap()],
            Mode::R,
            Bounds::default(),
            Exec::default(),
        )
        .unwrap();
        assert!(p.rows.is_empty());
    }

    #[test]
    fn trivial_links_give_zero_matrix() {
        for name in ["t3", "s2xs1", "f1xi"] {
            let m = lookup(name).unwrap();
            let seeds: Vec<WrapClass> = (0..4).map(|i| WrapClass::empty().u_act(&m.pi1, i)).collect();
            let p = assemble_presentation(&m, &seeds, Mode::R, Bounds::default(), Exec::default()).unwrap();
            assert!(p.is_zero(), "{name}");
        }
    }

    #[test]
    fn t3_contains_example_rows() {
        let m = lookup("t3").unwrap();
        let alpha = m.wrap("<b1,b2,b3>").unwrap();
        let p = assemble_presentation(
            &m,
            std::slice::from_ref(&alpha),
            Mode::R,
            Bounds::default(),
            Exec::default(),
        )
        .unwrap();
        assert_eq!(p.columns.len(), 5);
        assert!(p.incomplete.is_empty());
        let rendered: Vec<String> = p
            .rows
            .iter()
            .map(|r| render_vector(&r.values.map_coeffs(|c| c.to_rpoly().unwrap()), &m.pi1))
            .collect();
        assert!(rendered.contains(&"z*q*<b1*b2, b3> + (q^2 - 1)*<b1, b2, b3>".to_string()));
        for r in &p.rows {
            assert!(row_length(&r.values) <= r.generator.source.len());
        }
        let seq = assemble_presentation(&m, &[alpha], Mode::R, Bounds::default(), Exec::Sequential).unwrap();
        assert_eq!(seq, p);
    }

    #[test]
    fn graded_mode_moves_trivial_classes_into_u() {
        let m = lookup("t3").unwrap();
        let d = &m.delta_entries[0];
        let p = assemble_presentation(
            &m,
            std::slice::from_ref(&d.alpha),
            Mode::Ru,
            Bounds::default(),
            Exec::default(),
        )
        .unwrap();
        assert!(p.columns.iter().all(|c| c.trivial_count() == 0));
        let row = p.rows.iter().find(|r| r.generator.entry.is_some()).unwrap();
        let b2 = m.wrap("<b2>").unwrap();
        assert!(row.values.coeff(&b2).u_coeff(1).max_z_degree() == Some(1));
    }
}
