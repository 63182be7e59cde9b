//! Folding a tree into a DAG with one node per distinct subtree.

use std::collections::HashMap;
use std::fmt::Write;

use super::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Leaf,
    V,
    W,
}

impl Tag {
    pub fn label(self) -> &'static str {
        match self {
            Tag::Leaf => "T",
            Tag::V => "V",
            Tag::W => "W",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DagNode {
    pub tag: Tag,
    /// Head first, then the tail in order.
    pub children: Vec<usize>,
}

/// Node ids follow first-visit (pre-order) order from the root, so the root
/// is always node 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    nodes: Vec<DagNode>,
}

impl Dag {
    pub fn fold(t: &Tree) -> Dag {
        let mut table = HashMap::new();
        let mut interned = Vec::new();
        let root = intern(t, &mut table, &mut interned);

        let mut renumber = vec![usize::MAX; interned.len()];
        let mut order = Vec::with_capacity(interned.len());
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            if renumber[id] != usize::MAX {
                continue;
            }
            renumber[id] = order.len();
            order.push(id);
            let (_, children): &(Tag, Vec<usize>) = &interned[id];
            stack.extend(children.iter().rev());
        }
        let nodes = order
            .iter()
            .map(|&id| {
                let (tag, children) = &interned[id];
                DagNode {
                    tag: *tag,
                    children: children.iter().map(|c| renumber[*c]).collect(),
                }
            })
            .collect();
        Dag { nodes }
    }

    pub fn nodes(&self) -> &[DagNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.iter().map(|n| n.children.len()).sum()
    }

    /// Rebuilds the tree; shared DAG nodes become shared subtrees.
    pub fn unfold(&self) -> Tree {
        let mut built: Vec<Option<Tree>> = vec![None; self.nodes.len()];
        self.build(0, &mut built)
    }

    fn build(&self, id: usize, built: &mut Vec<Option<Tree>>) -> Tree {
        if let Some(t) = &built[id] {
            return t.clone();
        }
        let node = &self.nodes[id];
        let t = match node.tag {
            Tag::Leaf => Tree::T,
            tag => {
                let mut kids = node.children.iter().map(|c| self.build(*c, built));
                let head = kids.next().expect("inner node has a head");
                let tail = kids.collect();
                if tag == Tag::V {
                    Tree::v(head, tail)
                } else {
                    Tree::w(head, tail)
                }
            }
        };
        built[id] = Some(t.clone());
        t
    }

    /// Graphviz text: one line per node, then one line per edge labelled with
    /// the child position (0 is the head).
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for (id, n) in self.nodes.iter().enumerate() {
            writeln!(s, "n{id} [label=\"{}\"]", n.tag.label()).unwrap();
        }
        for (id, n) in self.nodes.iter().enumerate() {
            for (k, c) in n.children.iter().enumerate() {
                writeln!(s, "n{id} -> n{c} [label=\"{k}\"]").unwrap();
            }
        }
        s.push_str("}\n");
        s
    }
}

// Bottom-up hash consing: a node's key is its tag plus the ids of its
// already-interned children, so equal keys mean structurally equal subtrees.
fn intern(
    t: &Tree,
    table: &mut HashMap<(Tag, Vec<usize>), usize>,
    interned: &mut Vec<(Tag, Vec<usize>)>,
) -> usize {
    let children = match t.node() {
        None => Vec::new(),
        Some(n) => n.counters().map(|c| intern(c, table, interned)).collect(),
    };
    let key = (t.tag(), children);
    if let Some(&id) = table.get(&key) {
        return id;
    }
    let id = interned.len();
    interned.push(key.clone());
    table.insert(key, id);
    id
}
