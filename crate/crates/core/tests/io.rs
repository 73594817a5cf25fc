use proptest::prelude::*;
use quarterlap::io::{decode_image, encode_image, load_image, load_image_with, save_image, AlphaPolicy};
use quarterlap::{Error, ImageBuffer};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn eight_bit_round_trip_is_byte_identical(
        (w, h, ch, bytes) in (1usize..9, 1usize..9, prop::sample::select(vec![1usize, 3]))
            .prop_flat_map(|(w, h, ch)| (Just(w), Just(h), Just(ch), prop::collection::vec(any::<u8>(), w * h * ch))),
        ext in prop::sample::select(vec!["png", "pgm", "ppm"]),
    ) {
        prop_assume!(!(ext == "pgm" && ch == 3) && !(ext == "ppm" && ch == 1));
        let dir = tempfile::tempdir().unwrap();
        let first = dir.path().join(format!("a.{ext}"));
        let second = dir.path().join(format!("b.{ext}"));
        let img = ImageBuffer::from_interleaved_u8(w, h, ch, &bytes).unwrap();
        save_image(&img, &first).unwrap();
        let loaded = load_image(&first).unwrap();
        prop_assert_eq!(&loaded, &img);
        save_image(&loaded, &second).unwrap();
        prop_assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
    }
}

#[test]
fn missing_file_is_unreadable() {
    let err = load_image("/nonexistent/never.png").unwrap_err();
    assert!(matches!(err, Error::Unreadable { .. }));
}

#[test]
fn truncated_file_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.png");
    let png = encode_image(
        &ImageBuffer::filled(20, 20, 1, 3.0).unwrap(),
        quarterlap::io::RasterFormat::Png,
    )
    .unwrap();
    std::fs::write(&path, &png[..40]).unwrap();
    let err = load_image_with(&path, AlphaPolicy::Reject).unwrap_err();
    assert!(matches!(err, Error::Unreadable { .. }), "{err}");
    assert!(err.to_string().contains("unreadable file"));
}

#[test]
fn save_errors() {
    let img = ImageBuffer::filled(2, 2, 1, 1.0).unwrap();
    assert!(matches!(
        save_image(&img, "/tmp/x.bmp"),
        Err(Error::UnsupportedFormat(_))
    ));
    assert!(matches!(
        save_image(&img, "/nonexistent/dir/x.png"),
        Err(Error::Unwritable { .. })
    ));
}

#[test]
fn ascii_pnm_is_not_accepted() {
    assert!(matches!(
        decode_image(b"P2\n1 1\n255\n7\n", AlphaPolicy::Drop),
        Err(Error::UnsupportedFormat(_))
    ));
}
