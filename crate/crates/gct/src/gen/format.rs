//! The category file format: a single JSON document with rational scalars
//! as strings, bit-exact under save/load.
//!
//! Basis morphisms are globally enumerated by ordering the pairs
//! (source, target) lexicographically and then counting inside each
//! Hom-space; `comp` entries refer to these global ids. Loading validates
//! structure first (index ranges, coefficient lengths), then the full
//! categorical axioms via `validate_triang`, and rejects on any defect.

use crate::exactlin::{Matrix, Scalar};
use crate::homcat::CategoryTable;
use crate::tricat::{validate_triang, TriangCategory};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::Path;

pub const FORMAT_TAG: &str = "category-table/v1";

#[derive(Serialize, Deserialize, Clone)]
struct FileObject {
    name: String,
}

#[derive(Serialize, Deserialize, Clone)]
struct FileComp {
    g: usize,
    f: usize,
    c: Vec<Scalar>,
}

#[derive(Serialize, Deserialize, Clone)]
struct FileIdent {
    obj: usize,
    c: Vec<Scalar>,
}

#[derive(Serialize, Deserialize, Clone)]
struct FileTransport {
    src: usize,
    tgt: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

#[derive(Serialize, Deserialize, Clone)]
struct FileShift {
    perm: Vec<usize>,
    transport: Vec<FileTransport>,
}

#[derive(Serialize, Deserialize, Clone)]
struct FileSerre {
    perm: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone)]
struct FileCategory {
    format: String,
    name: String,
    objects: Vec<FileObject>,
    hom_dims: Vec<(usize, usize, usize)>,
    comp: Vec<FileComp>,
    idents: Vec<FileIdent>,
    shift: FileShift,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    serre: Option<FileSerre>,
}

fn to_file(t: &TriangCategory) -> FileCategory {
    let c = &t.base;
    let n = c.object_count();
    let mut hom_dims = Vec::new();
    for s in 0..n {
        for tt in 0..n {
            let d = c.hom_dim_pair(s, tt);
            if d > 0 {
                hom_dims.push((s, tt, d));
            }
        }
    }
    let mut comp = Vec::new();
    for g in 0..c.basis_count() {
        let (gs, gt, gk) = c.basis_triple(g);
        for f in 0..c.basis_count() {
            let (fs, ft, fk) = c.basis_triple(f);
            if ft != gs {
                continue;
            }
            let coeffs = c.compose_basis((gs, gt, gk), (fs, ft, fk));
            if coeffs.iter().all(Scalar::is_zero) {
                continue;
            }
            comp.push(FileComp { g, f, c: coeffs });
        }
    }
    let idents = (0..n)
        .map(|x| FileIdent {
            obj: x,
            c: c.ident(x).to_vec(),
        })
        .collect();
    let mut transport: Vec<FileTransport> = t
        .shift_transport()
        .iter()
        .map(|(&(src, tgt), m)| FileTransport {
            src,
            tgt,
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect(),
        })
        .collect();
    transport.sort_by_key(|e| (e.src, e.tgt));
    FileCategory {
        format: FORMAT_TAG.to_string(),
        name: t.label.clone(),
        objects: c
            .objects()
            .iter()
            .map(|o| FileObject {
                name: o.name.clone(),
            })
            .collect(),
        hom_dims,
        comp,
        idents,
        shift: FileShift {
            perm: t.shift_perm().to_vec(),
            transport,
        },
        serre: t.serre_perm().map(|p| FileSerre { perm: p.to_vec() }),
    }
}

fn structural_errors(file: &FileCategory) -> Vec<String> {
    let mut errs = Vec::new();
    let n = file.objects.len();
    if file.format != FORMAT_TAG {
        errs.push(format!(
            "unknown format tag {:?}, expected {FORMAT_TAG:?}",
            file.format
        ));
    }
    let mut dims = vec![vec![0usize; n]; n];
    for &(s, t, d) in &file.hom_dims {
        if s >= n || t >= n {
            errs.push(format!("hom_dims entry ({s},{t},{d}) out of range"));
        } else {
            dims[s][t] = d;
        }
    }
    if !errs.is_empty() {
        return errs;
    }
    let mut offsets = vec![vec![0usize; n]; n];
    let mut acc = 0usize;
    for s in 0..n {
        for t in 0..n {
            offsets[s][t] = acc;
            acc += dims[s][t];
        }
    }
    let triple = |id: usize| -> Option<(usize, usize, usize)> {
        for s in 0..n {
            for t in 0..n {
                if id >= offsets[s][t] && id < offsets[s][t] + dims[s][t] {
                    return Some((s, t, id - offsets[s][t]));
                }
            }
        }
        None
    };
    for e in &file.comp {
        match (triple(e.g), triple(e.f)) {
            (Some((gs, gt, _)), Some((fs, ft, _))) => {
                if ft != gs {
                    errs.push(format!(
                        "comp entry (g={}, f={}) is not composable: f targets {ft}, g starts at {gs}",
                        e.g, e.f
                    ));
                } else if e.c.len() != dims[fs][gt] {
                    errs.push(format!(
                        "comp entry (g={}, f={}) has {} coefficients, expected {}",
                        e.g,
                        e.f,
                        e.c.len(),
                        dims[fs][gt]
                    ));
                }
            }
            _ => errs.push(format!(
                "comp entry (g={}, f={}) references unknown basis ids",
                e.g, e.f
            )),
        }
    }
    if file.idents.len() != n {
        errs.push(format!("expected {n} identity entries, found {}", file.idents.len()));
    }
    for e in &file.idents {
        if e.obj >= n {
            errs.push(format!("identity entry for unknown object {}", e.obj));
        } else if e.c.len() != dims[e.obj][e.obj] {
            errs.push(format!(
                "identity of object {} has {} coefficients, expected {}",
                e.obj,
                e.c.len(),
                dims[e.obj][e.obj]
            ));
        }
    }
    if file.shift.perm.len() != n || file.shift.perm.iter().any(|&x| x >= n) {
        errs.push("shift permutation malformed".into());
    }
    for tr in &file.shift.transport {
        if tr.src >= n || tr.tgt >= n {
            errs.push(format!("transport entry ({},{}) out of range", tr.src, tr.tgt));
        } else if tr.entries.len() != tr.rows * tr.cols {
            errs.push(format!(
                "transport entry ({},{}) has {} entries, expected {}",
                tr.src,
                tr.tgt,
                tr.entries.len(),
                tr.rows * tr.cols
            ));
        }
    }
    if let Some(serre) = &file.serre {
        if serre.perm.len() != n || serre.perm.iter().any(|&x| x >= n) {
            errs.push("serre permutation malformed".into());
        }
    }
    errs
}

fn from_file(file: FileCategory) -> Result<TriangCategory> {
    let errs = structural_errors(&file);
    if !errs.is_empty() {
        return Err(Error::InvalidTable(errs));
    }
    let n = file.objects.len();
    let mut dims = vec![vec![0usize; n]; n];
    for &(s, t, d) in &file.hom_dims {
        dims[s][t] = d;
    }
    let names = file.objects.iter().map(|o| o.name.clone()).collect();
    let mut comp = HashMap::new();
    for e in &file.comp {
        comp.insert((e.g, e.f), e.c.clone());
    }
    let mut idents = vec![Vec::new(); n];
    for e in &file.idents {
        idents[e.obj] = e.c.clone();
    }
    let base = CategoryTable::new(names, dims, comp, idents);
    let mut transport = HashMap::new();
    for tr in &file.shift.transport {
        let m = Matrix::from_fn(tr.rows, tr.cols, |i, j| tr.entries[i * tr.cols + j].clone());
        transport.insert((tr.src, tr.tgt), m);
    }
    let t = TriangCategory::new(
        base,
        file.name.clone(),
        file.shift.perm.clone(),
        transport,
        file.serre.as_ref().map(|s| s.perm.clone()),
    );
    let violations = validate_triang(&t);
    if !violations.is_empty() {
        return Err(Error::InvalidTable(
            violations.iter().map(|v| v.to_string()).collect(),
        ));
    }
    Ok(t)
}

pub fn to_json(t: &TriangCategory) -> String {
    serde_json::to_string_pretty(&to_file(t)).expect("category serializes")
}

pub fn from_json(text: &str) -> Result<TriangCategory> {
    let file: FileCategory = serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        let byte = byte_offset(text, line, column);
        Error::Parse {
            line,
            column,
            byte,
            message: e.to_string(),
        }
    })?;
    from_file(file)
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut offset = 0;
    for (k, l) in text.split('\n').enumerate() {
        if k + 1 == line {
            return offset + column.saturating_sub(1).min(l.len());
        }
        offset += l.len() + 1;
    }
    text.len()
}

pub fn save(t: &TriangCategory, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(t) + "\n")?;
    Ok(())
}

pub fn load(path: &Path) -> Result<TriangCategory> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::nakayama::gen_stable_nakayama;

    #[test]
    fn roundtrip_is_bit_exact() {
        let t = gen_stable_nakayama(2, 4).unwrap();
        let json = to_json(&t);
        let t2 = from_json(&json).unwrap();
        assert_eq!(to_json(&t2), json);
    }

    #[test]
    fn truncated_file_reports_position() {
        let t = gen_stable_nakayama(1, 2).unwrap();
        let json = to_json(&t);
        let cut = &json[..json.len() / 2];
        match from_json(cut) {
            Err(Error::Parse { byte, .. }) => assert!(byte > 0),
            other => panic!("expected parse error, got {:?}", other.map(|t| t.label)),
        }
    }

    #[test]
    fn corrupted_composition_is_rejected() {
        let t = gen_stable_nakayama(2, 4).unwrap();
        let json = to_json(&t);
        // flip one composition coefficient to break associativity or identity
        let bad = json.replacen("\"1\"", "\"7\"", 1);
        assert_ne!(bad, json);
        match from_json(&bad) {
            Err(Error::InvalidTable(msgs)) => assert!(!msgs.is_empty()),
            other => panic!("expected validation failure, got {:?}", other.map(|t| t.label)),
        }
    }
}
