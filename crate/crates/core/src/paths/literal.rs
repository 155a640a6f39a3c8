//! `start=<b1,b2,b3>; events=(+1:<b1+b2,b3>)(-1:<b1+b3,b2>); end=<b1,b2,b3>`
//!
//! Every key is optional; missing endpoints become the symbols `<start>` and `<end>`.

use crate::groups::{GroupError, GroupModel};
use crate::wrap::WrapClass;

use super::{CrossingEvent, Label, PathError, PathWord};

pub(crate) fn parse_path(src: &str, model: Option<&GroupModel>) -> Result<PathWord, PathError> {
    let mut start = None;
    let mut end = None;
    let mut events = Vec::new();
    let mut offset = 0;
    for seg in src.split(';') {
        let here = offset;
        offset += seg.len() + 1;
        if seg.trim().is_empty() {
            continue;
        }
        let eq = seg
            .find('=')
            .ok_or_else(|| err(here + 1 + lead(seg), "expected key=value"))?;
        let key = seg[..eq].trim();
        let val_at = here + eq + 1;
        let val = &seg[eq + 1..];
        match key {
            "start" => start = Some(parse_label(val, val_at, model)?),
            "end" => end = Some(parse_label(val, val_at, model)?),
            "events" => events = parse_events(val, val_at, model)?,
            other => return Err(err(here + 1 + lead(seg), &format!("unknown key `{other}`"))),
        }
    }
    Ok(PathWord {
        start: start.unwrap_or_else(|| Label::symbol("start")),
        end: end.unwrap_or_else(|| Label::symbol("end")),
        events,
    })
}

pub(crate) fn render_path(p: &PathWord, model: Option<&GroupModel>) -> String {
    let events: String = p
        .events
        .iter()
        .map(|e| format!("({:+}:{})", e.sign, e.smoothed.render(model)))
        .collect();
    format!(
        "start={}; events={}; end={}",
        p.start.render(model),
        events,
        p.end.render(model)
    )
}

fn err(column: usize, message: &str) -> PathError {
    PathError::Parse {
        column,
        message: message.to_string(),
    }
}

fn lead(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

/// `val` starts at byte `at` of the whole literal.
fn parse_label(val: &str, at: usize, model: Option<&GroupModel>) -> Result<Label, PathError> {
    let col = at + lead(val) + 1;
    let t = val.trim();
    let inner = t
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .ok_or_else(|| err(col, "expected a label <...>"))?;
    match model {
        Some(m) => WrapClass::parse(m, t).map(Label::Wrap).map_err(|e| match e {
            GroupError::Parse { column, message } => err(col + column - 1, &message),
            other => PathError::Group(other),
        }),
        None => Ok(Label::Symbol(inner.trim().to_string())),
    }
}

fn parse_events(val: &str, at: usize, model: Option<&GroupModel>) -> Result<Vec<CrossingEvent>, PathError> {
    let bytes = val.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i == bytes.len() {
            return Ok(out);
        }
        if bytes[i] != b'(' {
            return Err(err(at + i + 1, "expected '('"));
        }
        let colon = val[i..]
            .find(':')
            .map(|c| c + i)
            .ok_or_else(|| err(at + i + 1, "expected ':'"))?;
        let sign = match val[i + 1..colon].trim() {
            "+1" | "+" | "1" => 1,
            "-1" | "-" => -1,
            _ => return Err(err(at + i + 2, "crossing sign must be +1 or -1")),
        };
        let close = val[colon..]
            .find('>')
            .map(|c| c + colon)
            .ok_or_else(|| err(at + colon + 2, "expected '>'"))?;
        let label = parse_label(&val[colon + 1..=close], at + colon + 1, model)?;
        let mut j = close + 1;
        while j < bytes.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j == bytes.len() || bytes[j] != b')' {
            return Err(err(at + j + 1, "expected ')'"));
        }
        out.push(CrossingEvent { sign, smoothed: label });
        i = j + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_literal() {
        let p = parse_path("events=(+1:<A>)", None).unwrap();
        assert_eq!(p.events, vec![CrossingEvent::new(1, Label::symbol("A"))]);
        assert_eq!(p.start, Label::symbol("start"));
    }

    #[test]
    fn wrap_literal_roundtrip() {
        let g = GroupModel::free_abelian(3);
        let src = "start=<b1,b2,b3>; events=(+1:<b1+b2,b3>)(-1:<b1+b3,b2>); end=<b1,b2,b3>";
        let p = parse_path(src, Some(&g)).unwrap();
        assert_eq!(p.index(), 0);
        let text = render_path(&p, Some(&g));
        assert_eq!(
            text,
            "start=<b1, b2, b3>; events=(+1:<b1*b2, b3>)(-1:<b1*b3, b2>); end=<b1, b2, b3>"
        );
        assert_eq!(parse_path(&text, Some(&g)).unwrap(), p);
    }

    #[test]
    fn errors_carry_columns() {
        assert!(matches!(
            parse_path("events=(+2:<A>)", None),
            Err(PathError::Parse { column: 9, .. })
        ));
        assert!(matches!(
            parse_path("bogus=<A>", None),
            Err(PathError::Parse { column: 1, .. })
        ));
        let g = GroupModel::free_abelian(1);
        assert!(matches!(parse_path("start=<b2>", Some(&g)), Err(PathError::Group(_))));
    }
}
