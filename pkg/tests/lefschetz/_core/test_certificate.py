import json
from pathlib import Path

from lefschetz._braid.standard import chain, full_twist
from lefschetz._braid.word import BraidWord
from lefschetz._core.certificate import (
    braid_certificate,
    engine_version,
    sha256,
    symplectic_certificate,
)
from lefschetz._invariants.symplectic import sp_identity, transvection

CERTIFICATE_KEYS = {
    "claim",
    "strands",
    "word_digest",
    "normal_form_digest",
    "target_digest",
    "verified",
    "timestamp",
    "engine_version",
}


class TestSha256:
    def test_known_digest(self):
        assert sha256("") == (
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        )


class TestBraidCertificate:
    def test_verified(self):
        # Act
        certificate = braid_certificate("twist", chain(4, 4, 4), full_twist(4))

        # Assert
        assert certificate.verified
        assert certificate.strands == 4
        assert certificate.normal_form_digest == certificate.target_digest
        assert certificate.normal_form is None
        assert certificate.engine_version == engine_version()

    def test_not_verified(self):
        word = BraidWord(strands=3, letters=(1, 2))
        certificate = braid_certificate("wrong", word, full_twist(3))
        assert not certificate.verified
        assert certificate.normal_form_digest != certificate.target_digest

    def test_full_includes_normal_form(self):
        certificate = braid_certificate(
            "twist", full_twist(3), full_twist(3), full=True
        )
        assert certificate.normal_form is not None
        assert "normal_form" in json.loads(certificate.dumps())

    def test_dumps_omits_missing_normal_form(self):
        certificate = braid_certificate("twist", full_twist(3), full_twist(3))
        assert "normal_form" not in json.loads(certificate.dumps())

    def test_dumped_keys(self):
        certificate = braid_certificate("twist", full_twist(3), full_twist(3))
        assert set(json.loads(certificate.dumps())) == CERTIFICATE_KEYS

    def test_write(self, tmp_path: Path):
        # Arrange
        path = tmp_path / "cert.json"
        certificate = braid_certificate("twist", full_twist(3), full_twist(3))

        # Act
        certificate.write(path)

        # Assert
        assert json.loads(path.read_text())["claim"] == "twist"


class TestSymplecticCertificate:
    def test_verified(self):
        certificate = symplectic_certificate(
            "sp", "[]", sp_identity(1), sp_identity(1), full=True
        )
        assert certificate.verified
        assert certificate.strands is None
        assert certificate.normal_form == {"matrix": [[1, 0], [0, 1]]}

    def test_not_verified(self):
        certificate = symplectic_certificate(
            "sp", "[]", transvection((1, 0)), sp_identity(1)
        )
        assert not certificate.verified

    def test_dumped_keys_match_braid_certificates(self):
        # Arrange
        certificate = symplectic_certificate(
            "sp", "[]", sp_identity(2), sp_identity(2)
        )

        # Act
        data = json.loads(certificate.dumps())

        # Assert
        assert set(data) == CERTIFICATE_KEYS
        assert data["strands"] is None
