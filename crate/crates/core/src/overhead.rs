//! Byte-exact secured-frame sizing for IPsec ESP, MACsec, and TLS.
//!
//! All frame lengths are on-wire Ethernet frame lengths: they include the
//! 14-byte Ethernet header and exclude the FCS. Under this convention a
//! 62-byte SCTP SACK frame expands to exactly 138 bytes when wrapped in
//! ESP tunnel mode with AES256-CBC + HMAC-SHA2-256-128.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Ethernet header: destination + source MAC + ethertype (no VLAN, no FCS).
pub const ETH_HEADER_LEN: u64 = 14;
/// IPv4 header without options.
pub const IPV4_HEADER_LEN: u64 = 20;
/// ESP header: SPI + sequence number.
pub const ESP_HEADER_LEN: u64 = 8;
/// ESP trailer: pad-length + next-header bytes (padding itself excluded).
pub const ESP_TRAILER_LEN: u64 = 2;
/// MACsec SecTAG including the 8-byte SCI.
pub const MACSEC_SECTAG_LEN: u64 = 16;
/// MACsec integrity check value.
pub const MACSEC_ICV_LEN: u64 = 16;
/// Smallest per-record TLS overhead.
pub const TLS_MIN_RECORD_OVERHEAD: u64 = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OverheadError {
    /// Frame too short to carry the layers the protocol assumes.
    #[error("frame of {len} B is shorter than the {min} B minimum required for {context}")]
    InvalidFrame {
        len: u64,
        min: u64,
        context: &'static str,
    },
    #[error("protocol {0} requires a cipher suite but none was configured")]
    MissingCipher(Protocol),
    #[error("no per-packet overhead is defined for protocol {0}")]
    UnsupportedProtocol(Protocol),
    #[error("invalid cipher suite: {0}")]
    InvalidSuite(String),
    #[error("invalid security config: {0}")]
    InvalidConfig(String),
    #[error("unknown cipher name `{0}`")]
    UnknownCipherName(String),
    #[error("unknown protocol name `{0}`")]
    UnknownProtocolName(String),
}

/// Cipher/integrity suites usable for ESP (and, for size accounting, TLS).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CipherId {
    Aes128Cbc,
    Aes256Cbc,
    Aes128Gcm,
    Aes256Gcm,
    Aes128Ccm,
    Aes256Ccm,
    ChaCha20Poly1305,
}

impl CipherId {
    pub const ALL: [CipherId; 7] = [
        CipherId::Aes128Cbc,
        CipherId::Aes256Cbc,
        CipherId::Aes128Gcm,
        CipherId::Aes256Gcm,
        CipherId::Aes128Ccm,
        CipherId::Aes256Ccm,
        CipherId::ChaCha20Poly1305,
    ];

    /// AEAD suites carry their own authentication tag; CBC suites need a
    /// separate integrity function.
    pub fn is_aead(self) -> bool {
        !matches!(self, CipherId::Aes128Cbc | CipherId::Aes256Cbc)
    }

    pub fn name(self) -> &'static str {
        match self {
            CipherId::Aes128Cbc => "aes128-cbc",
            CipherId::Aes256Cbc => "aes256-cbc",
            CipherId::Aes128Gcm => "aes128-gcm",
            CipherId::Aes256Gcm => "aes256-gcm",
            CipherId::Aes128Ccm => "aes128-ccm",
            CipherId::Aes256Ccm => "aes256-ccm",
            CipherId::ChaCha20Poly1305 => "chacha20-poly1305",
        }
    }
}

impl fmt::Display for CipherId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CipherId {
    type Err = OverheadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CipherId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| OverheadError::UnknownCipherName(s.to_string()))
    }
}

/// Separate integrity functions for non-AEAD suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegrityId {
    /// SHA2-256 HMAC truncated to the first 128 bits.
    HmacSha2_256_128,
}

/// Framing-relevant parameters of a cipher/integrity suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CipherSuite {
    pub id: CipherId,
    /// ESP ciphertext alignment: 16 for CBC block ciphers, 4 for AEAD
    /// suites (the ESP-mandated 4-byte alignment).
    pub block_align: u64,
    /// Explicit IV carried on the wire: 16 B for CBC, 8 B for GCM/CCM/ChaCha.
    pub iv_len: u64,
    /// Authentication tag (or truncated HMAC) appended to the frame.
    pub icv_len: u64,
    pub aead: bool,
    /// Required for CBC suites, forbidden for AEAD suites.
    pub integrity: Option<IntegrityId>,
}

impl CipherSuite {
    /// The canonical parameters for a suite.
    pub fn standard(id: CipherId) -> CipherSuite {
        if id.is_aead() {
            CipherSuite {
                id,
                block_align: 4,
                iv_len: 8,
                icv_len: 16,
                aead: true,
                integrity: None,
            }
        } else {
            CipherSuite {
                id,
                block_align: 16,
                iv_len: 16,
                icv_len: 16,
                aead: false,
                integrity: Some(IntegrityId::HmacSha2_256_128),
            }
        }
    }

    /// Checked constructor for non-canonical parameter combinations.
    pub fn new(
        id: CipherId,
        block_align: u64,
        iv_len: u64,
        icv_len: u64,
        integrity: Option<IntegrityId>,
    ) -> Result<CipherSuite, OverheadError> {
        let suite = CipherSuite {
            id,
            block_align,
            iv_len,
            icv_len,
            aead: id.is_aead(),
            integrity,
        };
        suite.validate()?;
        Ok(suite)
    }

    pub fn validate(&self) -> Result<(), OverheadError> {
        if !matches!(self.block_align, 4 | 16) {
            return Err(OverheadError::InvalidSuite(format!(
                "block alignment must be 4 or 16, got {}",
                self.block_align
            )));
        }
        if !matches!(self.iv_len, 8 | 16) {
            return Err(OverheadError::InvalidSuite(format!(
                "IV length must be 8 or 16, got {}",
                self.iv_len
            )));
        }
        if self.icv_len != 16 {
            return Err(OverheadError::InvalidSuite(format!(
                "ICV length must be 16, got {}",
                self.icv_len
            )));
        }
        if self.aead && self.integrity.is_some() {
            return Err(OverheadError::InvalidSuite(format!(
                "AEAD suite {} must not carry a separate integrity function",
                self.id
            )));
        }
        if !self.aead && self.integrity.is_none() {
            return Err(OverheadError::InvalidSuite(format!(
                "CBC suite {} requires a separate integrity function",
                self.id
            )));
        }
        Ok(())
    }
}

/// Security protocols with a modeled per-packet cost.
///
/// `SshV2` appears only in the published overhead floors (management-plane
/// option); it has no framing model here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Protocol {
    None,
    EspTunnel,
    EspTransport,
    Macsec,
    Tls,
    SshV2,
}

impl Protocol {
    pub fn name(self) -> &'static str {
        match self {
            Protocol::None => "none",
            Protocol::EspTunnel => "esp-tunnel",
            Protocol::EspTransport => "esp-transport",
            Protocol::Macsec => "macsec",
            Protocol::Tls => "tls",
            Protocol::SshV2 => "ssh-v2",
        }
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Protocol {
    type Err = OverheadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Protocol::None),
            "esp-tunnel" => Ok(Protocol::EspTunnel),
            "esp-transport" => Ok(Protocol::EspTransport),
            "macsec" => Ok(Protocol::Macsec),
            "tls" => Ok(Protocol::Tls),
            "ssh-v2" => Ok(Protocol::SshV2),
            other => Err(OverheadError::UnknownProtocolName(other.to_string())),
        }
    }
}

/// A complete framing configuration: which protocol and which suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecurityConfig {
    pub protocol: Protocol,
    /// Required for ESP; used by TLS only to name the suite in reports.
    pub cipher: Option<CipherSuite>,
    /// MACsec confidentiality on/off. Framing cost is identical either way.
    pub macsec_encrypt: bool,
    /// New outer IP header added by ESP tunnel mode (IPv4, no options).
    pub outer_ip_len: u64,
    pub esp_header_len: u64,
    pub eth_header_len: u64,
    /// Constant per-record TLS overhead profile.
    pub tls_record_overhead: u64,
}

impl SecurityConfig {
    fn base(protocol: Protocol) -> SecurityConfig {
        SecurityConfig {
            protocol,
            cipher: None,
            macsec_encrypt: false,
            outer_ip_len: IPV4_HEADER_LEN,
            esp_header_len: ESP_HEADER_LEN,
            eth_header_len: ETH_HEADER_LEN,
            tls_record_overhead: TLS_MIN_RECORD_OVERHEAD,
        }
    }

    pub fn none() -> SecurityConfig {
        SecurityConfig::base(Protocol::None)
    }

    pub fn esp_tunnel(cipher: CipherSuite) -> SecurityConfig {
        SecurityConfig {
            cipher: Some(cipher),
            ..SecurityConfig::base(Protocol::EspTunnel)
        }
    }

    pub fn esp_transport(cipher: CipherSuite) -> SecurityConfig {
        SecurityConfig {
            cipher: Some(cipher),
            ..SecurityConfig::base(Protocol::EspTransport)
        }
    }

    pub fn macsec(encrypt: bool) -> SecurityConfig {
        SecurityConfig {
            macsec_encrypt: encrypt,
            ..SecurityConfig::base(Protocol::Macsec)
        }
    }

    pub fn tls(record_overhead: u64) -> Result<SecurityConfig, OverheadError> {
        let cfg = SecurityConfig {
            tls_record_overhead: record_overhead,
            ..SecurityConfig::base(Protocol::Tls)
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), OverheadError> {
        if self.esp_header_len != ESP_HEADER_LEN {
            return Err(OverheadError::InvalidConfig(format!(
                "ESP header length is fixed at {ESP_HEADER_LEN} B, got {}",
                self.esp_header_len
            )));
        }
        if self.eth_header_len != ETH_HEADER_LEN {
            return Err(OverheadError::InvalidConfig(format!(
                "Ethernet header length is fixed at {ETH_HEADER_LEN} B, got {}",
                self.eth_header_len
            )));
        }
        if self.tls_record_overhead < TLS_MIN_RECORD_OVERHEAD {
            return Err(OverheadError::InvalidConfig(format!(
                "TLS record overhead must be >= {TLS_MIN_RECORD_OVERHEAD} B, got {}",
                self.tls_record_overhead
            )));
        }
        if let Some(suite) = &self.cipher {
            suite.validate()?;
        }
        Ok(())
    }
}

/// Per-layer byte accounting of one secured frame.
///
/// Invariants: `ct_frame_len = pt_frame_len + overhead_total` and
/// `overhead_total = outer_headers + iv + padding + trailer + icv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OverheadBreakdown {
    pub pt_frame_len: u64,
    /// Headers added in front of the protected payload (outer IP + ESP
    /// header for tunnel mode, the SecTAG for MACsec, the whole record
    /// overhead for the TLS profile).
    pub outer_headers: u64,
    pub iv: u64,
    pub padding: u64,
    pub trailer: u64,
    pub icv: u64,
    pub ct_frame_len: u64,
    pub overhead_total: u64,
}

impl OverheadBreakdown {
    fn assemble(pt: u64, outer_headers: u64, iv: u64, padding: u64, trailer: u64, icv: u64) -> Self {
        let overhead_total = outer_headers + iv + padding + trailer + icv;
        OverheadBreakdown {
            pt_frame_len: pt,
            outer_headers,
            iv,
            padding,
            trailer,
            icv,
            ct_frame_len: pt + overhead_total,
            overhead_total,
        }
    }

    /// The no-op breakdown for unsecured traffic.
    pub fn identity(pt: u64) -> Self {
        OverheadBreakdown::assemble(pt, 0, 0, 0, 0, 0)
    }

    /// `(layer, bytes)` rows in wire order, for CSV emission.
    pub fn layers(&self) -> [(&'static str, u64); 8] {
        [
            ("pt_frame", self.pt_frame_len),
            ("outer_headers", self.outer_headers),
            ("iv", self.iv),
            ("padding", self.padding),
            ("trailer", self.trailer),
            ("icv", self.icv),
            ("overhead_total", self.overhead_total),
            ("ct_frame", self.ct_frame_len),
        ]
    }
}

fn round_up(value: u64, align: u64) -> u64 {
    debug_assert!(align > 0);
    value.div_ceil(align) * align
}

/// ESP tunnel mode: the whole inner IP packet (frame minus the Ethernet
/// header) is encrypted behind a new outer IPv4 header.
pub fn esp_tunnel_frame_length(
    pt_frame_len: u64,
    cipher: &CipherSuite,
    cfg: &SecurityConfig,
) -> Result<OverheadBreakdown, OverheadError> {
    cipher.validate()?;
    let min = cfg.eth_header_len + cfg.outer_ip_len;
    if pt_frame_len < min {
        return Err(OverheadError::InvalidFrame {
            len: pt_frame_len,
            min,
            context: "ESP tunnel mode (frame must contain an inner IP packet)",
        });
    }
    let inner = pt_frame_len - cfg.eth_header_len;
    let enc_payload = round_up(inner + ESP_TRAILER_LEN, cipher.block_align);
    let padding = enc_payload - inner - ESP_TRAILER_LEN;
    Ok(OverheadBreakdown::assemble(
        pt_frame_len,
        cfg.outer_ip_len + cfg.esp_header_len,
        cipher.iv_len,
        padding,
        ESP_TRAILER_LEN,
        cipher.icv_len,
    ))
}

/// ESP transport mode: only the transport payload behind the original IP
/// header is encrypted; no outer header is added.
pub fn esp_transport_frame_length(
    pt_frame_len: u64,
    cipher: &CipherSuite,
    cfg: &SecurityConfig,
) -> Result<OverheadBreakdown, OverheadError> {
    cipher.validate()?;
    let min = cfg.eth_header_len + cfg.outer_ip_len;
    if pt_frame_len < min {
        return Err(OverheadError::InvalidFrame {
            len: pt_frame_len,
            min,
            context: "ESP transport mode (frame must contain an IP header)",
        });
    }
    let payload = pt_frame_len - cfg.eth_header_len - cfg.outer_ip_len;
    let enc_payload = round_up(payload + ESP_TRAILER_LEN, cipher.block_align);
    let padding = enc_payload - payload - ESP_TRAILER_LEN;
    Ok(OverheadBreakdown::assemble(
        pt_frame_len,
        cfg.esp_header_len,
        cipher.iv_len,
        padding,
        ESP_TRAILER_LEN,
        cipher.icv_len,
    ))
}

/// MACsec adds a fixed 32 bytes (16 B SecTAG + 16 B ICV) in both modes;
/// AES-GCM is a counter-mode construction, so no padding is needed.
pub fn macsec_frame_length(
    pt_frame_len: u64,
    macsec_encrypt: bool,
) -> Result<OverheadBreakdown, OverheadError> {
    let _ = macsec_encrypt; // framing cost is mode-independent
    if pt_frame_len < ETH_HEADER_LEN {
        return Err(OverheadError::InvalidFrame {
            len: pt_frame_len,
            min: ETH_HEADER_LEN,
            context: "MACsec (frame must contain an Ethernet header)",
        });
    }
    Ok(OverheadBreakdown::assemble(
        pt_frame_len,
        MACSEC_SECTAG_LEN,
        0,
        0,
        0,
        MACSEC_ICV_LEN,
    ))
}

/// TLS is modeled as a constant per-record overhead, not a structural
/// record layout.
pub fn tls_record_length(pt_payload_len: u64, cfg: &SecurityConfig) -> OverheadBreakdown {
    OverheadBreakdown::assemble(pt_payload_len, cfg.tls_record_overhead, 0, 0, 0, 0)
}

/// Published per-packet overhead floors of the interface-requirements
/// table: ESP tunnel 57 B, MACsec 32 B, TLS 25 B, SSHv2 28 B.
pub fn min_overhead(protocol: Protocol) -> Result<u64, OverheadError> {
    match protocol {
        Protocol::EspTunnel => Ok(57),
        Protocol::Macsec => Ok(32),
        Protocol::Tls => Ok(25),
        Protocol::SshV2 => Ok(28),
        Protocol::None | Protocol::EspTransport => {
            Err(OverheadError::UnsupportedProtocol(protocol))
        }
    }
}

/// Dispatch on the configured protocol. `Protocol::None` is the identity.
pub fn secured_frame_length(
    pt_frame_len: u64,
    cfg: &SecurityConfig,
) -> Result<OverheadBreakdown, OverheadError> {
    match cfg.protocol {
        Protocol::None => Ok(OverheadBreakdown::identity(pt_frame_len)),
        Protocol::EspTunnel => {
            let cipher = cfg
                .cipher
                .as_ref()
                .ok_or(OverheadError::MissingCipher(Protocol::EspTunnel))?;
            esp_tunnel_frame_length(pt_frame_len, cipher, cfg)
        }
        Protocol::EspTransport => {
            let cipher = cfg
                .cipher
                .as_ref()
                .ok_or(OverheadError::MissingCipher(Protocol::EspTransport))?;
            esp_transport_frame_length(pt_frame_len, cipher, cfg)
        }
        Protocol::Macsec => macsec_frame_length(pt_frame_len, cfg.macsec_encrypt),
        Protocol::Tls => Ok(tls_record_length(pt_frame_len, cfg)),
        Protocol::SshV2 => Err(OverheadError::UnsupportedProtocol(Protocol::SshV2)),
    }
}
