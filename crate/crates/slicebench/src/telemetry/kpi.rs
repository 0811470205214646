//! KPI kinds, layers, locations and the canonical measurement catalog.

use serde::{Deserialize, Serialize};
use std::fmt;

/// System layer a KPI belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Layer {
    Service,
    NetworkFunction,
    Infrastructure,
}

impl Layer {
    pub const ALL: [Layer; 3] = [Layer::Service, Layer::NetworkFunction, Layer::Infrastructure];
}

/// Network domain a location belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Ran,
    Cn,
    /// User equipment side; folded into the RAN for per-domain analysis.
    Edge,
}

/// Monitored node or link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Hss,
    Mme,
    Spgw,
    SpgwHost,
    Enb,
    Controller,
    Ue,
    /// Link between the slice controller and the eNB.
    ControllerEnb,
    /// S1-U link between the eNB and the SPGW.
    S1u,
    /// SGi link between the SPGW and the external network.
    Sgi,
}

impl Location {
    pub const NODES: [Location; 7] = [
        Location::Hss,
        Location::Mme,
        Location::Spgw,
        Location::SpgwHost,
        Location::Enb,
        Location::Controller,
        Location::Ue,
    ];

    pub const LINKS: [Location; 3] = [Location::ControllerEnb, Location::S1u, Location::Sgi];

    pub fn is_link(self) -> bool {
        matches!(self, Location::ControllerEnb | Location::S1u | Location::Sgi)
    }

    pub fn domain(self) -> Domain {
        match self {
            Location::Hss | Location::Mme | Location::Spgw | Location::SpgwHost => Domain::Cn,
            Location::Enb | Location::Controller => Domain::Ran,
            Location::Ue => Domain::Edge,
            Location::ControllerEnb => Domain::Ran,
            Location::S1u | Location::Sgi => Domain::Cn,
        }
    }

    /// Domain used by per-domain analysis points. The UE reports to the
    /// RAN analysis point.
    pub fn analysis_domain(self) -> Domain {
        match self.domain() {
            Domain::Edge => Domain::Ran,
            d => d,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Location::Hss => "hss",
            Location::Mme => "mme",
            Location::Spgw => "spgw",
            Location::SpgwHost => "spgw_host",
            Location::Enb => "enb",
            Location::Controller => "controller",
            Location::Ue => "ue",
            Location::ControllerEnb => "controller_enb",
            Location::S1u => "s1u",
            Location::Sgi => "sgi",
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unit of a KPI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Unit {
    Mbps,
    Ms,
    CountPerSec,
    Percent,
    Index,
}

/// Monitored KPI kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KpiKind {
    Throughput,
    Rtt,
    RadioTx,
    RadioRtx,
    Cqi,
    Mcs,
    Msd,
    TcpRtx,
    Cpu,
    Memory,
    Storage,
    NetTx,
    NetRx,
    LinkDelay,
}

impl KpiKind {
    pub const ALL: [KpiKind; 14] = [
        KpiKind::Throughput,
        KpiKind::Rtt,
        KpiKind::RadioTx,
        KpiKind::RadioRtx,
        KpiKind::Cqi,
        KpiKind::Mcs,
        KpiKind::Msd,
        KpiKind::TcpRtx,
        KpiKind::Cpu,
        KpiKind::Memory,
        KpiKind::Storage,
        KpiKind::NetTx,
        KpiKind::NetRx,
        KpiKind::LinkDelay,
    ];

    pub fn layer(self) -> Layer {
        match self {
            KpiKind::Throughput | KpiKind::Rtt => Layer::Service,
            KpiKind::RadioTx
            | KpiKind::RadioRtx
            | KpiKind::Cqi
            | KpiKind::Mcs
            | KpiKind::Msd
            | KpiKind::TcpRtx => Layer::NetworkFunction,
            KpiKind::Cpu
            | KpiKind::Memory
            | KpiKind::Storage
            | KpiKind::NetTx
            | KpiKind::NetRx
            | KpiKind::LinkDelay => Layer::Infrastructure,
        }
    }

    pub fn unit(self) -> Unit {
        match self {
            KpiKind::Throughput => Unit::Mbps,
            KpiKind::Rtt | KpiKind::LinkDelay => Unit::Ms,
            KpiKind::Cqi | KpiKind::Mcs => Unit::Index,
            KpiKind::Cpu | KpiKind::Memory | KpiKind::Storage => Unit::Percent,
            KpiKind::RadioTx
            | KpiKind::RadioRtx
            | KpiKind::Msd
            | KpiKind::TcpRtx
            | KpiKind::NetTx
            | KpiKind::NetRx => Unit::CountPerSec,
        }
    }

    /// Valid value range, used to clamp generated samples.
    pub fn range(self) -> (f64, f64) {
        match self {
            KpiKind::Cqi => (0.0, 15.0),
            KpiKind::Mcs => (0.0, 28.0),
            KpiKind::Cpu | KpiKind::Memory | KpiKind::Storage => (0.0, 100.0),
            _ => (0.0, f64::INFINITY),
        }
    }

    /// Locations this kind is measured at, in canonical order.
    pub fn valid_locations(self) -> &'static [Location] {
        match self {
            KpiKind::Throughput | KpiKind::Rtt => &[Location::Ue],
            KpiKind::RadioTx | KpiKind::RadioRtx | KpiKind::Cqi | KpiKind::Mcs => {
                &[Location::Controller]
            }
            KpiKind::Msd => &[Location::Enb],
            KpiKind::TcpRtx
            | KpiKind::Cpu
            | KpiKind::Memory
            | KpiKind::Storage
            | KpiKind::NetTx
            | KpiKind::NetRx => &Location::NODES,
            KpiKind::LinkDelay => &Location::LINKS,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KpiKind::Throughput => "throughput",
            KpiKind::Rtt => "rtt",
            KpiKind::RadioTx => "radio_tx",
            KpiKind::RadioRtx => "radio_rtx",
            KpiKind::Cqi => "cqi",
            KpiKind::Mcs => "mcs",
            KpiKind::Msd => "msd",
            KpiKind::TcpRtx => "tcp_rtx",
            KpiKind::Cpu => "cpu",
            KpiKind::Memory => "memory",
            KpiKind::Storage => "storage",
            KpiKind::NetTx => "net_tx",
            KpiKind::NetRx => "net_rx",
            KpiKind::LinkDelay => "link_delay",
        }
    }
}

impl fmt::Display for KpiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One entry of the measurement catalog: a KPI kind at a location.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Measurement {
    pub kind: KpiKind,
    pub location: Location,
}

impl Measurement {
    pub fn new(kind: KpiKind, location: Location) -> Self {
        Measurement { kind, location }
    }

    pub fn name(&self) -> String {
        format!("{}.{}", self.kind.name(), self.location.name())
    }

    pub fn layer(&self) -> Layer {
        self.kind.layer()
    }
}

impl fmt::Display for Measurement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.kind, self.location)
    }
}

/// The complete measurement catalog in canonical order: KPI kinds in
/// declaration order, each instantiated at its valid locations.
pub fn catalog() -> Vec<Measurement> {
    let mut out = Vec::with_capacity(52);
    for kind in KpiKind::ALL {
        for &location in kind.valid_locations() {
            out.push(Measurement::new(kind, location));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_52_measurements() {
        let cat = catalog();
        assert_eq!(cat.len(), 52);
        let mut unique = cat.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), 52, "catalog entries must be distinct");
    }

    #[test]
    fn catalog_link_delay_and_per_node_counts() {
        let cat = catalog();
        let link_delays = cat.iter().filter(|m| m.kind == KpiKind::LinkDelay).count();
        assert_eq!(link_delays, 3);
        let at_hss = cat.iter().filter(|m| m.location == Location::Hss).count();
        assert_eq!(at_hss, 6);
        let per_layer = |layer| cat.iter().filter(|m| m.layer() == layer).count();
        assert_eq!(per_layer(Layer::Service), 2);
        assert_eq!(per_layer(Layer::NetworkFunction), 12);
        assert_eq!(per_layer(Layer::Infrastructure), 38);
    }

    #[test]
    fn catalog_order_is_stable() {
        // Frozen canonical prefix and total ordering; any reordering is a
        // breaking change for serialized datasets.
        let cat = catalog();
        let names: Vec<String> = cat.iter().map(|m| m.name()).collect();
        assert_eq!(names[0], "throughput.ue");
        assert_eq!(names[1], "rtt.ue");
        assert_eq!(names[2], "radio_tx.controller");
        assert_eq!(names[6], "msd.enb");
        assert_eq!(names[7], "tcp_rtx.hss");
        assert_eq!(names[49], "link_delay.controller_enb");
        assert_eq!(names[51], "link_delay.sgi");
        assert_eq!(cat, catalog(), "catalog must be identical across calls");
    }

    #[test]
    fn domains_cover_all_locations() {
        for loc in Location::NODES.iter().chain(Location::LINKS.iter()) {
            // analysis_domain folds Edge into Ran and must never panic
            let d = loc.analysis_domain();
            assert!(matches!(d, Domain::Ran | Domain::Cn));
        }
        assert_eq!(Location::Ue.domain(), Domain::Edge);
        assert_eq!(Location::Ue.analysis_domain(), Domain::Ran);
        assert_eq!(Location::Controller.domain(), Domain::Ran);
        assert_eq!(Location::SpgwHost.domain(), Domain::Cn);
    }

    #[test]
    fn ranges_match_declared_bounds() {
        assert_eq!(KpiKind::Cqi.range(), (0.0, 15.0));
        assert_eq!(KpiKind::Mcs.range(), (0.0, 28.0));
        assert_eq!(KpiKind::Cpu.range(), (0.0, 100.0));
        assert_eq!(KpiKind::Throughput.range().0, 0.0);
    }
}
