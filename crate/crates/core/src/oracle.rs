//! Test-support oracles, kept deliberately independent of the production
//! code paths they check. Not part of the pipeline API.
//!
//! The path oracle enumerates all terminal pairs naively: it records the
//! root path of every value-bearing leaf, finds the lowest common ancestor
//! as the longest common prefix, and serializes the walk with its own label
//! rendering.

use crate::ast::{AstNode, MethodUnit, NodeKind};

/// `(source index, target index, path string)` for every surviving pair,
/// sorted.
pub fn brute_force_paths(
    method: &MethodUnit,
    max_path_length: usize,
    max_path_width: usize,
) -> Vec<(usize, usize, String)> {
    // Root path of each value-bearing leaf as a list of child indices.
    let mut leaf_paths: Vec<Vec<usize>> = Vec::new();
    fn walk(node: &AstNode, trail: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if node.children.is_empty() {
            if crate::ast::is_value_bearing(node) {
                out.push(trail.clone());
            }
            return;
        }
        for (i, c) in node.children.iter().enumerate() {
            trail.push(i);
            walk(c, trail, out);
            trail.pop();
        }
    }
    walk(&method.root, &mut Vec::new(), &mut leaf_paths);

    let mut results = Vec::new();
    for i in 0..leaf_paths.len() {
        for j in (i + 1)..leaf_paths.len() {
            let a = &leaf_paths[i];
            let b = &leaf_paths[j];
            let mut common = 0;
            while common < a.len() && common < b.len() && a[common] == b[common] {
                common += 1;
            }
            // Both leaves sit strictly below the LCA.
            let up_steps = a.len() - common; // includes the leaf itself
            let down_steps = b.len() - common;
            let node_count = up_steps + down_steps + 1;
            if node_count > max_path_length {
                continue;
            }
            let width = b[common] - a[common];
            if width > max_path_width {
                continue;
            }
            let mut names: Vec<String> = Vec::new();
            // Upward from the source leaf, through the LCA, down to the
            // target leaf.
            for d in (common..a.len()).rev() {
                names.push(label(method.root.node_at(&a[..=d]).unwrap()));
            }
            names.push(label(method.root.node_at(&a[..common]).unwrap()));
            for d in common..b.len() {
                names.push(label(method.root.node_at(&b[..=d]).unwrap()));
            }
            let mut s = String::new();
            for (k, name) in names.iter().enumerate() {
                if k > 0 {
                    s.push(if k <= up_steps { '^' } else { '_' });
                }
                s.push_str(name);
            }
            results.push((i, j, s));
        }
    }
    results.sort();
    results
}

/// Independent re-statement of the path label rules.
fn label(node: &AstNode) -> String {
    let op = node
        .children
        .iter()
        .find(|c| c.kind == NodeKind::Operator)
        .and_then(|c| c.token.as_deref());
    match (node.kind, op) {
        (NodeKind::BinaryExpr, Some(op)) | (NodeKind::AssignExpr, Some(op)) => {
            format!("{}:{}", node.kind.name(), op_name(op, true))
        }
        (NodeKind::UnaryExpr, Some(op)) => {
            let prefix = node.children[0].kind == NodeKind::Operator;
            format!("{}:{}", node.kind.name(), unary_name(op, prefix))
        }
        _ => node.kind.name().to_string(),
    }
}

fn op_name(op: &str, _binary: bool) -> String {
    match op {
        "<" => "Less".into(),
        "<=" => "LessEquals".into(),
        ">" => "Greater".into(),
        ">=" => "GreaterEquals".into(),
        "==" => "Equals".into(),
        "!=" => "NotEquals".into(),
        "&&" => "And".into(),
        "||" => "Or".into(),
        "&" => "BinaryAnd".into(),
        "|" => "BinaryOr".into(),
        "^" => "Xor".into(),
        "<<" => "LeftShift".into(),
        ">>" => "SignedRightShift".into(),
        ">>>" => "UnsignedRightShift".into(),
        "+" => "Plus".into(),
        "-" => "Minus".into(),
        "*" => "Multiply".into(),
        "/" => "Divide".into(),
        "%" => "Remainder".into(),
        "=" => "Assign".into(),
        "+=" => "PlusAssign".into(),
        "-=" => "MinusAssign".into(),
        "*=" => "MultiplyAssign".into(),
        "/=" => "DivideAssign".into(),
        "&=" => "AndAssign".into(),
        "|=" => "OrAssign".into(),
        "^=" => "XorAssign".into(),
        "%=" => "RemainderAssign".into(),
        "<<=" => "LeftShiftAssign".into(),
        ">>=" => "SignedRightShiftAssign".into(),
        ">>>=" => "UnsignedRightShiftAssign".into(),
        other => format!("Op({other})"),
    }
}

fn unary_name(op: &str, prefix: bool) -> String {
    match (op, prefix) {
        ("+", _) => "Plus".into(),
        ("-", _) => "Minus".into(),
        ("!", _) => "Not".into(),
        ("~", _) => "BitwiseComplement".into(),
        ("++", true) => "PreIncrement".into(),
        ("++", false) => "PostIncrement".into(),
        ("--", true) => "PreDecrement".into(),
        ("--", false) => "PostDecrement".into(),
        (other, _) => format!("Op({other})"),
    }
}
