use borderidx_core::{BoxShape, ExponentVector, IndexTable};

/// Renders an index table as whitespace-separated rows.
///
/// Dimension 2 prints rows top-down by decreasing second coordinate, first
/// coordinate increasing left to right, so `(0,0)` sits bottom-left.
/// Dimension 1 is a single row. Higher dimensions print one such slice per
/// value of the trailing coordinates, each preceded by a `# (…)` header.
pub fn matrix(table: &IndexTable) -> String {
    let bounds = table.bounds().coords();
    let mut out = String::new();
    match bounds.len() {
        0 => {
            out.push_str(&table.values()[0].to_string());
            out.push('\n');
        }
        1 => {
            let row: Vec<String> = table.values().iter().map(u64::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        _ => {
            let tail = ExponentVector::new(bounds[2..].to_vec());
            let slices: Vec<ExponentVector> = BoxShape::new(tail).points().collect();
            let headed = bounds.len() > 2;
            for (s, rest) in slices.iter().enumerate() {
                if headed {
                    if s > 0 {
                        out.push('\n');
                    }
                    let label: Vec<String> = rest.coords().iter().map(u32::to_string).collect();
                    out.push_str(&format!("# (*,*,{})\n", label.join(",")));
                }
                for j in (0..=bounds[1]).rev() {
                    let row: Vec<String> = (0..=bounds[0])
                        .map(|i| {
                            let mut coords = vec![i, j];
                            coords.extend_from_slice(rest.coords());
                            table
                                .get(&ExponentVector::new(coords))
                                .expect("point inside table")
                                .to_string()
                        })
                        .collect();
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
            }
        }
    }
    out
}

pub fn points(points: &[ExponentVector]) -> String {
    points.iter().map(|p| format!("{p}\n")).collect()
}
