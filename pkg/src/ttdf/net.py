"""Share servers and combiner over plain TCP.

Frame layout, both directions:

    magic "TTDF" | version 0x01 | type | u32 payload length | payload

Types: 0x01 share request (payload: bare image encoding), 0x02 share
response (payload: bare decryption-share encoding), 0x03 error (payload:
one code byte).  Error codes: 0x01 bad magic or version, 0x02 truncated
frame, 0x03 unknown type, 0x04 payload did not deserialize.

Each server holds one member key and answers any number of requests per
connection; header-level garbage closes the connection (the stream can no
longer be framed), payload-level garbage does not.  The combiner fans a
ciphertext image out to all endpoints at once and combines the first t
distinct-identity responses.
"""

from __future__ import annotations

import socket
import socketserver
import struct
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass

from .errors import (
    BindFailure,
    DeserializeError,
    DuplicateNode,
    InsufficientShares,
)
from .serial import (
    decshare_from_wire,
    decshare_to_wire,
    image_from_wire,
    image_to_wire,
)
from .tpke import TpkeCiphertext, TpkeSecretShare, tpke_dec

MAGIC = b"TTDF"
WIRE_VERSION = 0x01

MSG_SHARE_REQUEST = 0x01
MSG_SHARE_RESPONSE = 0x02
MSG_ERROR = 0x03

ERR_BAD_MAGIC = 0x01
ERR_TRUNCATED = 0x02
ERR_UNKNOWN_TYPE = 0x03
ERR_BAD_PAYLOAD = 0x04

DEFAULT_TIMEOUT = 5.0


@dataclass(frozen=True)
class ServerConfig:
    host: str
    port: int
    sk: TpkeSecretShare


def frame(msg_type: int, payload: bytes) -> bytes:
    return (MAGIC + bytes((WIRE_VERSION, msg_type))
            + struct.pack(">I", len(payload)) + payload)


def _recv_exact(sock, n: int) -> bytes:
    chunks = []
    got = 0
    while got < n:
        chunk = sock.recv(n - got)
        if not chunk:
            raise ConnectionError(f"peer closed after {got}/{n} bytes")
        chunks.append(chunk)
        got += len(chunk)
    return b"".join(chunks)


def read_frame(sock) -> tuple[int, bytes]:
    """Returns (type, payload); raises ValueError with an error code."""
    head = sock.recv(4)
    if not head:
        raise EOFError
    try:
        head += _recv_exact(sock, 4 - len(head)) if len(head) < 4 else b""
        if head != MAGIC:
            raise ValueError(ERR_BAD_MAGIC)
        version, msg_type = _recv_exact(sock, 2)
        if version != WIRE_VERSION:
            raise ValueError(ERR_BAD_MAGIC)
        (length,) = struct.unpack(">I", _recv_exact(sock, 4))
        payload = _recv_exact(sock, length)
    except ConnectionError:
        raise ValueError(ERR_TRUNCATED) from None
    return msg_type, payload


class _ShareHandler(socketserver.BaseRequestHandler):
    def handle(self):
        sk = self.server.member_key
        iface = sk.iface
        sock = self.request
        while True:
            try:
                msg_type, payload = read_frame(sock)
            except EOFError:
                return
            except ValueError as exc:
                code = exc.args[0]
                try:
                    sock.sendall(frame(MSG_ERROR, bytes((code,))))
                except OSError:
                    pass
                return      # stream is out of sync; drop the connection
            except OSError:
                return
            if msg_type != MSG_SHARE_REQUEST:
                sock.sendall(frame(MSG_ERROR, bytes((ERR_UNKNOWN_TYPE,))))
                continue
            try:
                image = image_from_wire(payload, iface)
            except DeserializeError:
                sock.sendall(frame(MSG_ERROR, bytes((ERR_BAD_PAYLOAD,))))
                continue
            share = tpke_dec(sk, TpkeCiphertext(image, ()))
            sock.sendall(frame(MSG_SHARE_RESPONSE,
                               decshare_to_wire(iface, share)))


class ShareServer(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, config: ServerConfig):
        self.member_key = config.sk
        try:
            super().__init__((config.host, config.port), _ShareHandler)
        except OSError as exc:
            raise BindFailure(
                f"cannot bind {config.host}:{config.port}: {exc}") from exc

    @property
    def address(self) -> tuple[str, int]:
        return self.socket.getsockname()[:2]

    def start_background(self) -> threading.Thread:
        # short poll interval so shutdown() returns promptly
        thread = threading.Thread(
            target=lambda: self.serve_forever(poll_interval=0.05),
            daemon=True)
        thread.start()
        return thread


def serve(config: ServerConfig) -> None:
    """Run a share server until interrupted; never returns normally."""
    with ShareServer(config) as server:
        server.serve_forever()


def request_share(addr, payload: bytes, iface, timeout: float):
    host, port = addr
    with socket.create_connection((host, port), timeout=timeout) as sock:
        sock.settimeout(timeout)
        sock.sendall(frame(MSG_SHARE_REQUEST, payload))
        msg_type, body = read_frame(sock)
    if msg_type == MSG_SHARE_RESPONSE:
        return decshare_from_wire(body, iface)
    if msg_type == MSG_ERROR:
        code = body[0] if body else 0
        raise DeserializeError(f"server reported error code 0x{code:02x}")
    raise DeserializeError(f"unexpected message type 0x{msg_type:02x}")


def combine_decrypt(pk, endpoints, ct: TpkeCiphertext, t: int,
                    timeout: float = DEFAULT_TIMEOUT) -> tuple:
    """Broadcast the image, gather t distinct shares, combine, unmask."""
    from .tpke import tpke_combine

    iface = pk.iface
    payload = image_to_wire(iface, ct.c1)
    by_id = {}
    collided = False
    pool = ThreadPoolExecutor(max_workers=max(1, len(endpoints)))
    try:
        futures = [pool.submit(request_share, addr, payload, iface, timeout)
                   for addr in endpoints]
        for fut in as_completed(futures):
            try:
                share = fut.result()
            except (OSError, EOFError, ValueError, DeserializeError):
                continue
            if share.id in by_id:
                collided = True
                continue
            by_id[share.id] = share
            if len(by_id) == t:
                break
    finally:
        pool.shutdown(wait=False, cancel_futures=True)
    if len(by_id) < t:
        if collided:
            raise DuplicateNode(
                "endpoints answered with colliding identities")
        raise InsufficientShares(
            f"only {len(by_id)} of {t} required shares arrived")
    shares = list(by_id.values())[:t]
    return tpke_combine(pk, shares, ct)
