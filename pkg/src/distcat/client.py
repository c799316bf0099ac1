"""Thin client for the verification service.

By default requests are routed through the ASGI app in-process, so the
CLI works with no server running and stays fully deterministic; point
``base_url`` at a deployed instance to go over the network instead.
"""

from __future__ import annotations

import asyncio
from typing import Any, Optional

import httpx


class ServiceClient:
    def __init__(self, base_url: Optional[str] = None, timeout: float = 600.0):
        self._timeout = timeout
        self._base_url = base_url.rstrip("/") if base_url else None
        self._app = None
        if self._base_url is None:
            from .service import create_app

            self._app = create_app()

    async def _request(self, method: str, path: str, payload: Optional[dict]) -> httpx.Response:
        if self._app is not None:
            transport: httpx.AsyncBaseTransport = httpx.ASGITransport(app=self._app)
            base_url = "http://distcat.local"
        else:
            transport = httpx.AsyncHTTPTransport()
            base_url = self._base_url
        async with httpx.AsyncClient(
            transport=transport, base_url=base_url, timeout=self._timeout
        ) as client:
            return await client.request(method, path, json=payload)

    def request(self, method: str, path: str, payload: Optional[dict] = None) -> httpx.Response:
        return asyncio.run(self._request(method, path, payload))

    def get(self, path: str) -> httpx.Response:
        return self.request("GET", path)

    def post(self, path: str, payload: dict[str, Any]) -> httpx.Response:
        return self.request("POST", path, payload)
