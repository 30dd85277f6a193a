use std::cell::Cell;

use moduli_core::oeis::{
    default_cache_dir, parse_bfile, Cache, Client, FetchPolicy, OeisError, OeisId, Source,
    Transport, TransportError, A074059_FIXTURE, CACHE_ENV,
};
use num_bigint::BigInt;

/// Serves a fixed response and counts requests.
struct Fake {
    response: Result<String, TransportError>,
    calls: Cell<usize>,
}

impl Fake {
    fn new(response: Result<&str, TransportError>) -> Self {
        Self {
            response: response.map(str::to_owned),
            calls: Cell::new(0),
        }
    }
}

impl Transport for Fake {
    fn get(&self, url: &str) -> Result<String, TransportError> {
        assert!(url.starts_with("https://oeis.org/A"), "{url}");
        self.calls.set(self.calls.get() + 1);
        self.response.clone()
    }
}

const SMALL: &str = "# test\n2 1\n3 1\n4 2\n5 7\n";

fn id(s: &str) -> OeisId {
    s.parse().unwrap()
}

#[test]
fn cache_first_with_warm_cache_skips_the_network() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    cache.write(OeisId::A074059, SMALL).unwrap();
    let client = Client::new(Fake::new(Ok("2 99\n")), cache);
    let r = client
        .fetch(OeisId::A074059, FetchPolicy::CacheFirst)
        .unwrap();
    assert_eq!(r.source, Source::Cache);
    assert_eq!(r.terms.len(), 4);
    assert_eq!(client.transport().calls.get(), 0);
}

#[test]
fn network_then_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let client = Client::new(Fake::new(Ok(SMALL)), Cache::new(dir.path().join("nested")));
    let fetched = client
        .fetch(id("A000001"), FetchPolicy::CacheFirst)
        .unwrap();
    assert_eq!(fetched.source, Source::Network);
    assert!(client
        .cache()
        .path(id("A000001"))
        .ends_with("A000001.bfile"));
    let cached = client
        .fetch(id("A000001"), FetchPolicy::CacheFirst)
        .unwrap();
    assert_eq!(cached.source, Source::Cache);
    assert_eq!(cached.terms, fetched.terms);
    assert_eq!(client.transport().calls.get(), 1);
    let leftovers = std::fs::read_dir(client.cache().dir()).unwrap().count();
    assert_eq!(leftovers, 1, "temporary files must be renamed away");
}

#[test]
fn network_first_prefers_the_network() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    cache.write(OeisId::A074059, "2 5\n").unwrap();
    let client = Client::new(Fake::new(Ok(SMALL)), cache);
    let r = client
        .fetch(OeisId::A074059, FetchPolicy::NetworkFirst)
        .unwrap();
    assert_eq!((r.source, r.terms.len()), (Source::Network, 4));
    assert_eq!(
        client.cache().read(OeisId::A074059).unwrap().as_deref(),
        Some(SMALL)
    );
}

#[test]
fn fallbacks_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let down = || Fake::new(Err(TransportError::Unavailable("offline".into())));
    let client = Client::new(down(), Cache::new(dir.path()));
    let r = client
        .fetch(OeisId::A074059, FetchPolicy::NetworkFirst)
        .unwrap();
    assert_eq!(r.source, Source::BundledFixture);
    assert!(matches!(
        client.fetch(id("A000045"), FetchPolicy::NetworkFirst),
        Err(OeisError::NetworkUnavailable(_))
    ));
    assert!(matches!(
        client.fetch(id("A000045"), FetchPolicy::Offline),
        Err(OeisError::UnknownSequence(_))
    ));
    assert!(matches!(
        client.fetch(id("A000045"), FetchPolicy::CacheFirst),
        Err(OeisError::UnknownSequence(_))
    ));
    let missing = Client::new(
        Fake::new(Err(TransportError::NotFound)),
        Cache::new(dir.path()),
    );
    assert!(matches!(
        missing.fetch(id("A999999"), FetchPolicy::NetworkFirst),
        Err(OeisError::UnknownSequence(_))
    ));
    let offline = client.fetch(OeisId::A074059, FetchPolicy::Offline).unwrap();
    assert_eq!(offline.source, Source::BundledFixture);
    assert_eq!(client.transport().calls.get(), 3);
}

#[test]
fn malformed_payload_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let client = Client::new(Fake::new(Ok("2 1\nabc\n")), Cache::new(dir.path()));
    match client.fetch(id("A000002"), FetchPolicy::NetworkFirst) {
        Err(OeisError::Parse { line, content, .. }) => {
            assert_eq!((line, content.as_str()), (2, "abc"))
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(client.cache().read(id("A000002")).unwrap(), None);
    let err = parse_bfile("abc").unwrap_err().to_string();
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn offset_is_pinned() {
    let b = parse_bfile(A074059_FIXTURE).unwrap();
    assert_eq!(b.offset, 2);
    assert_eq!(b.term(3), Some(&BigInt::from(1)));
    assert_eq!(b.term(4), Some(&BigInt::from(2)));
    assert_eq!(b.term(5), Some(&BigInt::from(7)));
}

#[test]
fn cache_dir_from_environment() {
    std::env::set_var(CACHE_ENV, "/tmp/some-oeis-cache");
    assert_eq!(
        default_cache_dir().unwrap(),
        std::path::Path::new("/tmp/some-oeis-cache")
    );
    std::env::remove_var(CACHE_ENV);
}
