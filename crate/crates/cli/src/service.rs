//! Local HTTP service used by the browser workbench.
//!
//! Every endpoint is a pure function of the request and the immutable
//! catalogs. Errors are `{"error", "detail"}` with status 400 (malformed
//! request), 404 (unknown id) or 422 (well-formed but unusable input).

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, RawQuery, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use cgw_core::catalog::{family_ground, CatalogRecord, CircleEntry, ConfigurationFile, Query};
use cgw_core::config::{Configuration, MarginalPair};
use cgw_core::hull::{hull_boundary, Feature, HullBoundary};
use cgw_core::implications::generate_basis;
use cgw_core::scalar::Scalar;
use cgw_core::tikz::{export_tikz, DEFAULT_WIDTH_CM};
use cgw_core::verify::{verify_by_propositions, verify_full, VerificationReport};
use cgw_core::{ConvexGeometry, Error, GroundSet};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::Catalogs;

pub const DEFAULT_PORT: u16 = 8437;

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    error: &'static str,
    detail: String,
}

impl ApiError {
    fn malformed(detail: impl ToString) -> Self {
        ApiError { status: StatusCode::BAD_REQUEST, error: "malformed_request", detail: detail.to_string() }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let (status, error) = match e {
            Error::UnknownId(_) => (StatusCode::NOT_FOUND, "unknown_id"),
            Error::Query(_) | Error::Format(_) | Error::Io(_) | Error::GroundSize(_) | Error::UnknownLabel { .. } => {
                (StatusCode::BAD_REQUEST, "malformed_request")
            }
            _ => (StatusCode::UNPROCESSABLE_ENTITY, "precondition_failed"),
        };
        ApiError { status, error, detail: e.to_string() }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    detail: &'a str,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(ErrorBody { error: self.error, detail: &self.detail })).into_response()
    }
}

type ApiResult<T> = std::result::Result<T, ApiError>;

fn parse_body<T: DeserializeOwned>(body: &Bytes) -> ApiResult<T> {
    serde_json::from_slice(body).map_err(ApiError::malformed)
}

/// A circle in a request; either every circle carries a label or none does
/// (then list order is label order).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CircleInput {
    #[serde(default)]
    pub label: Option<String>,
    pub x: f64,
    pub y: f64,
    pub r: f64,
}

fn configuration(circles: &[CircleInput]) -> ApiResult<Configuration<f64>> {
    let ground = GroundSet::new(circles.len())?;
    let labelled = circles.iter().filter(|c| c.label.is_some()).count();
    if labelled != 0 && labelled != circles.len() {
        return Err(ApiError::malformed("either all circles or none must carry a label"));
    }
    let file = ConfigurationFile {
        n: ground.len(),
        labels: ground.labels().map(String::from).collect(),
        circles: circles
            .iter()
            .enumerate()
            .map(|(i, c)| CircleEntry {
                label: c.label.clone().unwrap_or_else(|| ground.label(i).to_string()),
                x: c.x,
                y: c.y,
                r: c.r,
            })
            .collect(),
    };
    Ok(file.to_configuration()?)
}

/// Hull boundary of the circles of `subset`, with arc owners given as element indices.
pub fn subset_hull(conf: &Configuration<f64>, subset: &str) -> cgw_core::Result<HullBoundary<f64>> {
    let ground = conf.ground();
    let members: Vec<usize> = ground.encode(subset)?.elements().collect();
    let circles: Vec<_> = members.iter().map(|&i| *conf.circle(i)).collect();
    let mut boundary = hull_boundary(&circles)?;
    for f in &mut boundary.features {
        match f {
            Feature::Arc { circle, .. } => *circle = members[*circle],
            Feature::Segment { from_circle, to_circle, .. } => {
                *from_circle = members[*from_circle];
                *to_circle = members[*to_circle];
            }
        }
    }
    Ok(boundary)
}

async fn list_geometries(State(catalogs): State<Arc<Catalogs>>, RawQuery(raw): RawQuery) -> ApiResult<Json<Vec<CatalogRecord>>> {
    let mut sizes: Vec<usize> = (1..=5).collect();
    let mut terms = Vec::new();
    for pair in raw.as_deref().unwrap_or("").split('&').filter(|p| !p.is_empty()) {
        let (key, value) = pair.split_once('=').unwrap_or((pair, ""));
        match key {
            "n" => sizes = vec![value.parse().map_err(|_| ApiError::malformed(format!("bad n {value:?}")))?],
            "unique_atom" | "unique_coatom" => match value {
                "" | "true" | "1" => terms.push(key.to_string()),
                "false" | "0" => {}
                _ => return Err(ApiError::malformed(format!("bad flag value {pair:?}"))),
            },
            _ => terms.push(pair.to_string()),
        }
    }
    let query: Query = terms.join(",").parse()?;
    let mut out = Vec::new();
    for n in sizes {
        let catalog = catalogs.get(n)?;
        if let Some(m) = query.iso_to {
            if catalog.ground().check_family(m as u64).is_err() {
                continue;
            }
        }
        let ids = catalog.search(&query)?;
        out.extend(ids.iter().filter_map(|id| catalog.get(id)).cloned());
    }
    Ok(Json(out))
}

async fn get_geometry(State(catalogs): State<Arc<Catalogs>>, Path(id): Path<String>) -> ApiResult<Json<CatalogRecord>> {
    Ok(Json(catalogs.record(&id)?.clone()))
}

#[derive(Deserialize)]
struct InduceRequest {
    circles: Vec<CircleInput>,
    /// Subsets (as label strings) whose hull boundary should be returned.
    #[serde(default)]
    hulls: Vec<String>,
}

#[derive(Serialize)]
struct HullEntry {
    subset: String,
    features: Vec<Feature<f64>>,
}

#[derive(Serialize)]
struct InduceResponse {
    family_mask: u32,
    closed_sets: Vec<String>,
    marginal: Vec<MarginalPair<f64>>,
    hulls: Vec<HullEntry>,
}

async fn induce(body: Bytes) -> ApiResult<Json<InduceResponse>> {
    let req: InduceRequest = parse_body(&body)?;
    let conf = configuration(&req.circles)?;
    let induced = conf.induced_alignment(f64::default_eps());
    let ground = conf.ground();
    let hulls = req
        .hulls
        .iter()
        .map(|s| Ok(HullEntry { subset: s.clone(), features: subset_hull(&conf, s)?.features }))
        .collect::<ApiResult<_>>()?;
    Ok(Json(InduceResponse {
        family_mask: induced.family.0,
        closed_sets: induced.family.members().map(|s| ground.decode(s)).collect(),
        marginal: induced.marginal,
        hulls,
    }))
}

#[derive(Deserialize)]
struct VerifyRequest {
    #[serde(default)]
    geometry_id: Option<String>,
    #[serde(default)]
    family_mask: Option<u64>,
    circles: Vec<CircleInput>,
    #[serde(default)]
    by_propositions: bool,
}

async fn verify(State(catalogs): State<Arc<Catalogs>>, body: Bytes) -> ApiResult<Json<VerificationReport<f64>>> {
    let req: VerifyRequest = parse_body(&body)?;
    let geometry = match (&req.geometry_id, req.family_mask) {
        (Some(id), None) => catalogs.record(id)?.geometry()?,
        (None, Some(mask)) => ConvexGeometry::new(family_ground(mask)?, cgw_core::FamilyMask(mask as u32))?,
        _ => return Err(ApiError::malformed("give exactly one of geometry_id and family_mask")),
    };
    let conf = configuration(&req.circles)?;
    let eps = f64::default_eps();
    let report = if req.by_propositions {
        verify_by_propositions(&geometry, &generate_basis(&geometry), &conf, eps)?
    } else {
        verify_full(&geometry, &conf, eps)?
    };
    Ok(Json(report))
}

#[derive(Deserialize)]
struct HullRequest {
    circles: Vec<CircleInput>,
    subset: String,
}

async fn hull(body: Bytes) -> ApiResult<Json<HullBoundary<f64>>> {
    let req: HullRequest = parse_body(&body)?;
    let conf = configuration(&req.circles)?;
    Ok(Json(subset_hull(&conf, &req.subset)?))
}

#[derive(Deserialize)]
struct TikzRequest {
    circles: Vec<CircleInput>,
    #[serde(default)]
    width: Option<f64>,
}

async fn tikz(body: Bytes) -> ApiResult<Response> {
    let req: TikzRequest = parse_body(&body)?;
    let width = req.width.unwrap_or(DEFAULT_WIDTH_CM);
    if !(width.is_finite() && width > 0.0) {
        return Err(ApiError::malformed(format!("width must be positive, got {width}")));
    }
    let conf = configuration(&req.circles)?;
    Ok(([(header::CONTENT_TYPE, "text/plain; charset=utf-8")], export_tikz(&conf, width)).into_response())
}

pub fn router(catalogs: Arc<Catalogs>) -> Router {
    Router::new()
        .route("/api/geometries", get(list_geometries))
        .route("/api/geometries/{id}", get(get_geometry))
        .route("/api/induce", post(induce))
        .route("/api/verify", post(verify))
        .route("/api/hull", post(hull))
        .route("/api/tikz", post(tikz))
        .with_state(catalogs)
}

/// Serve on `127.0.0.1:port` until interrupted.
pub async fn serve(catalogs: Arc<Catalogs>, port: u16) -> anyhow::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .map_err(|e| anyhow::anyhow!("cannot bind {addr}: {e}"))?;
    eprintln!("listening on http://{addr}");
    axum::serve(listener, router(catalogs))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}
