//! Browser bindings: Ext¹-quivers, Hilbert-Poincaré polynomials and the
//! Ringel self-duality check, each returning a JSON string.

use std::sync::Arc;

use blockdual::blocks::hp_partial_flag;
use blockdual::quiver::{block_quiver, self_duality_analysis, QuiverGraph};
use blockdual::{BlockDescriptor, CartanDatum, KLTable, ParabolicSubset};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Small enough that a page never stalls on enumeration.
const WEB_CAP: usize = 5040;

fn block(cartan: &str, lambda: &str, mu: &str) -> blockdual::Result<BlockDescriptor> {
    let c = Arc::new(CartanDatum::parse(cartan)?.with_cap(WEB_CAP));
    BlockDescriptor::new(c, ParabolicSubset::parse(lambda)?, ParabolicSubset::parse(mu)?)
}

#[derive(Serialize)]
struct QuiverView<'a> {
    #[serde(flatten)]
    graph: &'a QuiverGraph,
    degrees: Vec<u64>,
}

fn view(q: &QuiverGraph) -> serde_json::Value {
    let degrees = (0..q.len()).map(|v| q.degree(v)).collect();
    serde_json::to_value(QuiverView { graph: q, degrees }).unwrap()
}

pub fn quiver_json_impl(cartan: &str, lambda: &str, mu: &str) -> Result<String, String> {
    let b = block(cartan, lambda, mu).map_err(|e| e.to_string())?;
    let t = KLTable::new(b.cartan().clone()).map_err(|e| e.to_string())?;
    let q = block_quiver(&b, &t).map_err(|e| e.to_string())?;
    Ok(view(&q).to_string())
}

pub fn hp_json_impl(n: usize, parts: &str) -> Result<String, String> {
    let parts = if parts.trim().is_empty() {
        vec![1; n]
    } else {
        parts.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad part `{p}`"))).collect::<Result<_, _>>()?
    };
    let p = hp_partial_flag(n, &parts).map_err(|e| e.to_string())?;
    let dense: Vec<u64> = (0..=p.max_degree().unwrap_or(0)).map(|d| p.coefficient(d)).collect();
    Ok(json!({"text": p.to_string(), "coefficients": dense, "total": p.eval_one()}).to_string())
}

pub fn self_duality_json_impl(cartan: &str, lambda: &str, mu: &str) -> Result<String, String> {
    let b = block(cartan, lambda, mu).map_err(|e| e.to_string())?;
    let t = KLTable::new(b.cartan().clone()).map_err(|e| e.to_string())?;
    let r = self_duality_analysis(&b, &t).map_err(|e| e.to_string())?;
    let side = |blk: &BlockDescriptor, q: &QuiverGraph, leaves| {
        json!({"lambda": blk.lambda().to_vec(), "mu": blk.mu().to_vec(), "quiver": view(q), "leaves": leaves})
    };
    Ok(json!({
        "block": side(&r.block, &r.quiver, &r.leaves),
        "dual": side(&r.dual, &r.dual_quiver, &r.dual_leaves),
        "verdict": r.verdict,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn quiver_json(cartan: &str, lambda: &str, mu: &str) -> Result<String, JsValue> {
    quiver_json_impl(cartan, lambda, mu).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hp_json(n: usize, parts: &str) -> Result<String, JsValue> {
    hp_json_impl(n, parts).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn self_duality_json(cartan: &str, lambda: &str, mu: &str) -> Result<String, JsValue> {
    self_duality_json_impl(cartan, lambda, mu).map_err(|e| JsValue::from_str(&e))
}
