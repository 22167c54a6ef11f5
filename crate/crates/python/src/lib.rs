use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ngon_core::builder::grow_with;
use ngon_core::graph::{
    is_generalized_ngon, parse_document, write_document, GraphDocument, VertexId, VertexSet,
};
use ngon_core::group::{
    automorphism_group, fano_plane, gq22, is_moufang, is_strongly_transitive,
    stabilizer_transitivity_degree,
};
use ngon_core::kmu::{in_class, KmuOptions, MuFunction};
use ngon_core::predim::{closure, d_min, delta, is_strong};
use ngon_core::witness::{
    make_cl_witness, make_cycle, make_double_path, make_gamma, make_path, make_star_path,
};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A parsed graph file: the graph, its named subsets and μ lines.
#[pyclass(frozen)]
struct Graph {
    doc: GraphDocument,
}

impl Graph {
    /// A subset name or a list of vertex ids.
    fn subset(&self, spec: &Bound<'_, PyAny>) -> PyResult<VertexSet> {
        if let Ok(name) = spec.extract::<String>() {
            return self
                .doc
                .subset(&name)
                .cloned()
                .ok_or_else(|| value_error(format!("unknown subset `{name}`")));
        }
        let ids: Vec<u32> = spec.extract()?;
        let ids: Vec<VertexId> = ids.into_iter().map(VertexId).collect();
        self.doc.graph.set_from_ids(&ids).map_err(value_error)
    }

    fn ids(&self, set: &VertexSet) -> Vec<u32> {
        self.doc
            .graph
            .ids_of(set)
            .into_iter()
            .map(|v| v.0)
            .collect()
    }

    fn mu(&self) -> PyResult<MuFunction> {
        let n = self.doc.graph.n();
        if self.doc.mu_lines.is_empty() {
            Ok(MuFunction::default_mu(n))
        } else {
            MuFunction::from_lines(n, self.doc.mu_lines.iter().map(String::as_str))
                .map_err(value_error)
        }
    }
}

#[pymethods]
impl Graph {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph {
            doc: parse_document(text).map_err(value_error)?,
        })
    }

    /// `kind` is one of path, cycle, gamma, star, double_path, cl, fano, gq22.
    #[staticmethod]
    #[pyo3(signature = (kind, n=3, length=0, windings=2, with_b=false))]
    fn witness(
        kind: &str,
        n: usize,
        length: usize,
        windings: usize,
        with_b: bool,
    ) -> PyResult<Self> {
        let doc = match kind {
            "path" => make_path(n, length),
            "cycle" => make_cycle(n, length),
            "gamma" => make_gamma(n),
            "star" => make_star_path(n),
            "double_path" => make_double_path(n),
            "cl" => make_cl_witness(n, windings, with_b),
            "fano" => Ok(GraphDocument::new(fano_plane())),
            "gq22" => Ok(GraphDocument::new(gq22())),
            other => return Err(value_error(format!("unknown witness `{other}`"))),
        }
        .map_err(value_error)?;
        Ok(Graph { doc })
    }

    fn to_text(&self) -> String {
        write_document(&self.doc)
    }

    #[getter]
    fn n(&self) -> usize {
        self.doc.graph.n()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.doc.graph.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.doc.graph.edge_count()
    }

    fn subset_names(&self) -> Vec<String> {
        self.doc.subsets.keys().cloned().collect()
    }

    fn delta(&self, subset: &Bound<'_, PyAny>) -> PyResult<i64> {
        Ok(delta(&self.doc.graph, &self.subset(subset)?))
    }

    fn d_min(&self, subset: &Bound<'_, PyAny>) -> PyResult<i64> {
        Ok(d_min(&self.doc.graph, &self.subset(subset)?))
    }

    fn closure(&self, subset: &Bound<'_, PyAny>) -> PyResult<Vec<u32>> {
        Ok(self.ids(&closure(&self.doc.graph, &self.subset(subset)?)))
    }

    /// `(holds, witness)`; the witness is an inclusion-minimal violator.
    fn is_strong(&self, subset: &Bound<'_, PyAny>) -> PyResult<(bool, Option<Vec<u32>>)> {
        let g = &self.doc.graph;
        let rep = is_strong(g, &self.subset(subset)?, &g.full_set()).map_err(value_error)?;
        Ok((rep.holds, rep.witness.map(|w| self.ids(&w))))
    }

    /// `(member, violation lines)`.
    #[pyo3(signature = (horizon=None, max_body=None))]
    fn kmu(
        &self,
        horizon: Option<usize>,
        max_body: Option<usize>,
    ) -> PyResult<(bool, Vec<String>)> {
        let opts = options(self.doc.graph.n(), horizon, max_body);
        let rep = in_class(&self.doc.graph, &self.mu()?, opts);
        Ok((
            rep.member,
            rep.violations.iter().map(|v| v.to_string()).collect(),
        ))
    }

    #[pyo3(signature = (thick=false))]
    fn is_ngon(&self, thick: bool) -> bool {
        is_generalized_ngon(&self.doc.graph, thick).holds
    }

    #[pyo3(signature = (type_preserving=false))]
    fn automorphism_order(&self, type_preserving: bool) -> BigUint {
        automorphism_group(&self.doc.graph, type_preserving).order()
    }

    #[pyo3(signature = (type_preserving=false))]
    fn is_strongly_transitive(&self, type_preserving: bool) -> PyResult<bool> {
        let g = &self.doc.graph;
        let grp = automorphism_group(g, type_preserving);
        Ok(is_strongly_transitive(g, &grp).map_err(value_error)?.holds)
    }

    #[pyo3(signature = (type_preserving=false))]
    fn is_moufang(&self, type_preserving: bool) -> PyResult<bool> {
        let g = &self.doc.graph;
        let grp = automorphism_group(g, type_preserving);
        Ok(is_moufang(g, &grp).map_err(value_error)?.holds)
    }

    fn transitivity_degree(&self, vertex: u32) -> PyResult<usize> {
        let g = &self.doc.graph;
        let grp = automorphism_group(g, false);
        stabilizer_transitivity_degree(g, &grp, VertexId(vertex)).map_err(value_error)
    }

    /// Grows a class member; returns the new graph and the step log lines.
    #[pyo3(signature = (steps, seed, horizon=None, max_body=None))]
    fn grow(
        &self,
        steps: usize,
        seed: u64,
        horizon: Option<usize>,
        max_body: Option<usize>,
    ) -> PyResult<(Graph, Vec<String>)> {
        let mu = self.mu()?;
        let opts = options(self.doc.graph.n(), horizon, max_body);
        let res = grow_with(&self.doc.graph, steps, seed, &mu, opts).map_err(value_error)?;
        let mut doc = GraphDocument::new(res.graph);
        doc.mu_lines = mu.to_lines();
        Ok((
            Graph { doc },
            res.log.iter().map(|l| l.to_string()).collect(),
        ))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, vertices={}, edges={})",
            self.doc.graph.n(),
            self.doc.graph.vertex_count(),
            self.doc.graph.edge_count()
        )
    }
}

fn options(n: usize, horizon: Option<usize>, max_body: Option<usize>) -> KmuOptions {
    let mut o = KmuOptions::for_n(n);
    o.horizon = horizon.unwrap_or(o.horizon);
    o.body_cap = max_body.unwrap_or(o.body_cap);
    o
}

#[pymodule]
fn ngon(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    Ok(())
}
