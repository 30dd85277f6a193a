use std::time::Duration;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransportError {
    #[error("not found")]
    NotFound,
    #[error("{0}")]
    Unavailable(String),
}

/// Blocking GET returning the response body.
pub trait Transport {
    fn get(&self, url: &str) -> Result<String, TransportError>;
}

impl<T: Transport + ?Sized> Transport for &T {
    fn get(&self, url: &str) -> Result<String, TransportError> {
        (**self).get(url)
    }
}

#[derive(Debug, Clone)]
pub struct HttpTransport {
    pub timeout: Duration,
}

impl Default for HttpTransport {
    fn default() -> Self {
        Self {
            timeout: Duration::from_secs(10),
        }
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<String, TransportError> {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(self.timeout))
            .build()
            .into();
        match agent.get(url).call() {
            Ok(mut resp) => resp
                .body_mut()
                .read_to_string()
                .map_err(|e| TransportError::Unavailable(e.to_string())),
            Err(ureq::Error::StatusCode(404)) => Err(TransportError::NotFound),
            Err(e) => Err(TransportError::Unavailable(e.to_string())),
        }
    }
}

/// Fails every request as unavailable.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoNetwork;

impl Transport for NoNetwork {
    fn get(&self, _url: &str) -> Result<String, TransportError> {
        Err(TransportError::Unavailable("network disabled".to_owned()))
    }
}
