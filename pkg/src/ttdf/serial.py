"""Binary encodings for every artifact that crosses a file or socket.

Layout conventions:

* files open with the 2-byte format version 0x0001, then a scheme tag
  byte (0x01 group-matrix, 0x02 lattice, 0x03 group-relation);
* keys embed their full parameter block so a file alone reconstructs the
  backend; ciphertexts and decryption shares carry only the tag and are
  decoded against a loaded public key;
* residues mod a known q are fixed-width big-endian (width from q);
  standalone integers use the canonical length-prefixed form;
* group elements are checked for subgroup membership while reading.
"""

from __future__ import annotations

from .adapter import (
    DdhBackend,
    LweBackend,
    TtdfInterface,
    TtdrBackend,
)
from .ddh import (
    DdhImage,
    DdhIndex,
    DdhMasterTrapdoor,
    DdhShare,
    DdhSharedTrapdoor,
)
from .encoding import (
    FORMAT_VERSION,
    Reader,
    encode_bits,
    encode_f64,
    encode_u16,
    encode_u32,
    encode_u8,
    encode_uint,
)
from .errors import DeserializeError
from .group import GroupParams, elem_from_reader, elem_to_bytes, group_params
from .hardcore import hc_from_reader, hc_to_bytes
from .lwe import (
    LweImage,
    LweIndex,
    LweMasterTrapdoor,
    LweParams,
    LweShare,
    LweSharedTrapdoor,
    validate_params,
)
from .rpke import RpkeCiphertext
from .tpke import (
    TpkeCiphertext,
    TpkeDecryptionShare,
    TpkeMasterKey,
    TpkePublicKey,
    TpkeSecretShare,
)

SCHEME_TAGS = {"ddh": 0x01, "lwe": 0x02, "ttdr": 0x03}
_TAG_NAMES = {v: k for k, v in SCHEME_TAGS.items()}


# -- fixed-width residue vectors ------------------------------------------

def _width(q: int) -> int:
    return (q.bit_length() + 7) // 8


def _vec_to_bytes(vals, q: int) -> bytes:
    w = _width(q)
    out = [encode_u32(len(vals))]
    out.extend(int(v % q).to_bytes(w, "big") for v in vals)
    return b"".join(out)


def _vec_from_reader(r: Reader, q: int) -> list:
    w = _width(q)
    count = r.u32()
    vals = []
    for _ in range(count):
        v = int.from_bytes(r.take(w), "big")
        if v >= q:
            raise DeserializeError(f"residue {v} >= modulus")
        vals.append(v)
    return vals


def _mat_to_bytes(mat, q: int) -> bytes:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    w = _width(q)
    out = [encode_u32(rows), encode_u32(cols)]
    for row in mat:
        if len(row) != cols:
            raise DeserializeError("ragged matrix")
        out.extend(int(v % q).to_bytes(w, "big") for v in row)
    return b"".join(out)


def _mat_from_reader(r: Reader, q: int, rows: int, cols: int) -> list:
    got_r, got_c = r.u32(), r.u32()
    if (got_r, got_c) != (rows, cols):
        raise DeserializeError(
            f"matrix is {got_r}x{got_c}, expected {rows}x{cols}")
    w = _width(q)
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            v = int.from_bytes(r.take(w), "big")
            if v >= q:
                raise DeserializeError(f"residue {v} >= modulus")
            row.append(v)
        out.append(row)
    return out


def _elems_to_bytes(elems) -> bytes:
    return encode_u32(len(elems)) + b"".join(elem_to_bytes(e) for e in elems)


def _elems_from_reader(r: Reader, params: GroupParams, count: int) -> tuple:
    got = r.u32()
    if got != count:
        raise DeserializeError(f"expected {count} group elements, got {got}")
    return tuple(elem_from_reader(r, params) for _ in range(count))


# -- backend parameter blocks ---------------------------------------------

def _group_params_to_bytes(params: GroupParams) -> bytes:
    return (encode_uint(params.p) + encode_uint(params.modulus)
            + encode_uint(params.g))


def _group_params_from_reader(r: Reader) -> GroupParams:
    p, modulus, g = r.uint(), r.uint(), r.uint()
    try:
        return group_params(p, modulus, g)
    except Exception as exc:
        raise DeserializeError(f"bad group parameters: {exc}") from exc


def _lwe_params_to_bytes(params: LweParams) -> bytes:
    return b"".join((
        encode_uint(params.d), encode_uint(params.q), encode_uint(params.p),
        encode_uint(params.h), encode_uint(params.l), encode_uint(params.w),
        encode_f64(params.alpha),
        encode_uint(params.n), encode_uint(params.t),
        encode_uint(params.eta), encode_uint(params.gamma),
        encode_uint(params.g_stat),
    ))


def _lwe_params_from_reader(r: Reader) -> LweParams:
    d, q, p, h, l, w = (r.uint() for _ in range(6))
    alpha = r.f64()
    n, t, eta, gamma, g_stat = (r.uint() for _ in range(5))
    params = LweParams(d, q, p, h, l, w, alpha, n, t, eta, gamma, g_stat)
    try:
        validate_params(params)
    except Exception as exc:
        raise DeserializeError(f"bad lattice parameters: {exc}") from exc
    return params


def iface_to_bytes(iface: TtdfInterface) -> bytes:
    tag = SCHEME_TAGS[iface.scheme]
    if iface.scheme == "ddh":
        body = (_group_params_to_bytes(iface.params) + encode_u32(iface.l)
                + encode_u32(iface.n) + encode_u32(iface.t))
    elif iface.scheme == "lwe":
        body = (_lwe_params_to_bytes(iface.params)
                + encode_u32(iface.lossiness))
    else:
        body = (_group_params_to_bytes(iface.params)
                + encode_u32(iface.n) + encode_u32(iface.t))
    return encode_u8(tag) + body


def iface_from_reader(r: Reader) -> TtdfInterface:
    tag = r.u8()
    name = _TAG_NAMES.get(tag)
    if name is None:
        raise DeserializeError(f"unknown scheme tag 0x{tag:02x}")
    if name == "ddh":
        params = _group_params_from_reader(r)
        l, n, t = r.u32(), r.u32(), r.u32()
        return DdhBackend(params, l, n, t)
    if name == "lwe":
        params = _lwe_params_from_reader(r)
        return LweBackend(params, r.u32())
    params = _group_params_from_reader(r)
    return TtdrBackend(params, r.u32(), r.u32())


# -- scheme-specific payloads ---------------------------------------------

def _ek_to_bytes(iface, ek) -> bytes:
    if iface.scheme == "lwe":
        q = iface.params.q
        return _mat_to_bytes(ek.a, q) + _mat_to_bytes(ek.c, q)
    out = [encode_u32(ek.l)]
    for row in ek.rows:
        out.append(b"".join(elem_to_bytes(e) for e in row))
    return b"".join(out)


def _ek_from_reader(r: Reader, iface):
    if iface.scheme == "lwe":
        p = iface.params
        a = _mat_from_reader(r, p.q, p.h, p.d)
        c = _mat_from_reader(r, p.q, p.h, p.w)
        return LweIndex(p, a, c)
    l = r.u32()
    expect = 2 if iface.scheme == "ttdr" else iface.l
    if l != expect:
        raise DeserializeError(f"index arity {l} != configured {expect}")
    rows = tuple(
        tuple(elem_from_reader(r, iface.params) for _ in range(l + 1))
        for _ in range(l))
    return DdhIndex(iface.params, l, iface.n, iface.t, rows)


def _mtd_to_bytes(iface, mtd) -> bytes:
    if iface.scheme == "lwe":
        q = iface.params.q
        out = [_mat_to_bytes(mtd.z, q), encode_u32(len(mtd.dmats))]
        out.extend(_mat_to_bytes(m, q) for m in mtd.dmats)
        return b"".join(out)
    p = iface.params.p
    return _vec_to_bytes(mtd.s, p) + _mat_to_bytes(mtd.d, p)


def _mtd_from_reader(r: Reader, iface):
    if iface.scheme == "lwe":
        p = iface.params
        z = _mat_from_reader(r, p.q, p.d, p.w)
        count = r.u32()
        if count != p.t - 1:
            raise DeserializeError("sharing coefficient count != t-1")
        dmats = tuple(_mat_from_reader(r, p.q, p.d, p.w)
                      for _ in range(count))
        return LweMasterTrapdoor(p, z, dmats)
    l = 2 if iface.scheme == "ttdr" else iface.l
    s = _vec_from_reader(r, iface.params.p)
    if len(s) != l:
        raise DeserializeError("trapdoor arity mismatch")
    d = _mat_from_reader(r, iface.params.p, l, iface.t - 1)
    return DdhMasterTrapdoor(iface.params, l, iface.n, iface.t,
                             tuple(s), tuple(tuple(row) for row in d))


def _std_to_bytes(iface, std) -> bytes:
    if iface.scheme == "lwe":
        return encode_uint(std.id) + _mat_to_bytes(std.t_mat, iface.params.q)
    return encode_uint(std.id) + _vec_to_bytes(std.values, iface.params.p)


def _std_from_reader(r: Reader, iface):
    if iface.scheme == "lwe":
        p = iface.params
        ident = r.uint()
        return LweSharedTrapdoor(p, ident, _mat_from_reader(r, p.q, p.d, p.w))
    ident = r.uint()
    values = _vec_from_reader(r, iface.params.p)
    l = 2 if iface.scheme == "ttdr" else iface.l
    if len(values) != l:
        raise DeserializeError("trapdoor arity mismatch")
    return DdhSharedTrapdoor(iface.params, l, iface.n, iface.t,
                             ident, tuple(values))


def _image_to_bytes(iface, image) -> bytes:
    if iface.scheme == "lwe":
        q = iface.params.q
        return _vec_to_bytes(image.a, q) + _vec_to_bytes(image.y, q)
    if iface.scheme == "ttdr":
        return _elems_to_bytes(image)
    return _elems_to_bytes(image.values)


def _image_from_reader(r: Reader, iface):
    if iface.scheme == "lwe":
        p = iface.params
        a = _vec_from_reader(r, p.q)
        y = _vec_from_reader(r, p.q)
        if len(a) != p.d or len(y) != p.w:
            raise DeserializeError("image dimensions mismatch")
        return LweImage(a, y)
    if iface.scheme == "ttdr":
        return _elems_from_reader(r, iface.params, 3)
    return DdhImage(_elems_from_reader(r, iface.params, iface.l + 1))


def _payload_to_bytes(iface, share) -> bytes:
    if iface.scheme == "lwe":
        return (encode_uint(share.id) + encode_uint(share.scale)
                + _vec_to_bytes(share.delta, iface.params.q))
    return encode_uint(share.id) + _elems_to_bytes(share.values)


def _payload_from_reader(r: Reader, iface):
    if iface.scheme == "lwe":
        ident = r.uint()
        scale = r.uint()
        delta = _vec_from_reader(r, iface.params.q)
        if len(delta) != iface.params.w:
            raise DeserializeError("share width mismatch")
        return LweShare(ident, delta, scale)
    ident = r.uint()
    count = 2 if iface.scheme == "ttdr" else iface.l
    return DdhShare(ident, _elems_from_reader(r, iface.params, count))


# -- top-level artifacts ---------------------------------------------------

def _header(iface) -> bytes:
    return encode_u16(FORMAT_VERSION) + encode_u8(SCHEME_TAGS[iface.scheme])


def _open(data: bytes) -> Reader:
    r = Reader(data)
    version = r.u16()
    if version != FORMAT_VERSION:
        raise DeserializeError(f"unsupported format version {version:#06x}")
    return r


def _check_tag(r: Reader, iface) -> None:
    tag = r.u8()
    if tag != SCHEME_TAGS[iface.scheme]:
        raise DeserializeError(
            f"scheme tag 0x{tag:02x} does not match key scheme {iface.scheme}")


def pk_to_bytes(pk: TpkePublicKey) -> bytes:
    return (encode_u16(FORMAT_VERSION) + iface_to_bytes(pk.iface)
            + _ek_to_bytes(pk.iface, pk.ek) + hc_to_bytes(pk.hc))


def pk_from_bytes(data: bytes) -> TpkePublicKey:
    r = _open(data)
    iface = iface_from_reader(r)
    ek = _ek_from_reader(r, iface)
    hc = hc_from_reader(r)
    r.expect_end()
    return TpkePublicKey(iface, ek, hc)


def msk_to_bytes(msk: TpkeMasterKey) -> bytes:
    return (encode_u16(FORMAT_VERSION) + iface_to_bytes(msk.iface)
            + _mtd_to_bytes(msk.iface, msk.mtd))


def msk_from_bytes(data: bytes) -> TpkeMasterKey:
    r = _open(data)
    iface = iface_from_reader(r)
    mtd = _mtd_from_reader(r, iface)
    r.expect_end()
    return TpkeMasterKey(iface, mtd)


def sk_to_bytes(sk: TpkeSecretShare) -> bytes:
    return (encode_u16(FORMAT_VERSION) + iface_to_bytes(sk.iface)
            + encode_uint(sk.id) + _std_to_bytes(sk.iface, sk.std))


def sk_from_bytes(data: bytes) -> TpkeSecretShare:
    r = _open(data)
    iface = iface_from_reader(r)
    ident = r.uint()
    std = _std_from_reader(r, iface)
    r.expect_end()
    if std.id != ident:
        raise DeserializeError("share identity disagrees with its payload")
    return TpkeSecretShare(iface, ident, std)


def ct_to_bytes(iface: TtdfInterface, ct: TpkeCiphertext) -> bytes:
    return (_header(iface) + _image_to_bytes(iface, ct.c1)
            + encode_bits(ct.c2))


def ct_from_bytes(data: bytes, iface: TtdfInterface) -> TpkeCiphertext:
    r = _open(data)
    _check_tag(r, iface)
    c1 = _image_from_reader(r, iface)
    c2 = r.bits()
    r.expect_end()
    return TpkeCiphertext(c1, c2)


def rct_to_bytes(iface: TtdfInterface, ct: RpkeCiphertext) -> bytes:
    out = [_header(iface), _image_to_bytes(iface, ct.c1),
           encode_bits(ct.c2), encode_u32(len(ct.published))]
    out.extend(encode_uint(s.id) + _payload_to_bytes(iface, s.payload)
               for s in ct.published)
    return b"".join(out)


def rct_from_bytes(data: bytes, iface: TtdfInterface) -> RpkeCiphertext:
    r = _open(data)
    _check_tag(r, iface)
    c1 = _image_from_reader(r, iface)
    c2 = r.bits()
    count = r.u32()
    published = tuple(
        TpkeDecryptionShare(r.uint(), _payload_from_reader(r, iface))
        for _ in range(count))
    r.expect_end()
    return RpkeCiphertext(c1, c2, published)


def decshare_to_bytes(iface: TtdfInterface,
                      share: TpkeDecryptionShare) -> bytes:
    return (_header(iface) + encode_uint(share.id)
            + _payload_to_bytes(iface, share.payload))


def decshare_from_bytes(data: bytes,
                        iface: TtdfInterface) -> TpkeDecryptionShare:
    r = _open(data)
    _check_tag(r, iface)
    ident = r.uint()
    payload = _payload_from_reader(r, iface)
    r.expect_end()
    if payload.id != ident:
        raise DeserializeError("share identity disagrees with its payload")
    return TpkeDecryptionShare(ident, payload)


def image_to_wire(iface: TtdfInterface, image) -> bytes:
    """Bare image encoding for socket payloads (no version header)."""
    return _image_to_bytes(iface, image)


def image_from_wire(data: bytes, iface: TtdfInterface):
    r = Reader(data)
    image = _image_from_reader(r, iface)
    r.expect_end()
    return image


def decshare_to_wire(iface: TtdfInterface,
                     share: TpkeDecryptionShare) -> bytes:
    return encode_uint(share.id) + _payload_to_bytes(iface, share.payload)


def decshare_from_wire(data: bytes,
                       iface: TtdfInterface) -> TpkeDecryptionShare:
    r = Reader(data)
    ident = r.uint()
    payload = _payload_from_reader(r, iface)
    r.expect_end()
    return TpkeDecryptionShare(ident, payload)
