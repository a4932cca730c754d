from typing import Any, Dict

from fastapi import FastAPI, File, Form, HTTPException, UploadFile
from fastapi.middleware.cors import CORSMiddleware

from clbc_config import TOOL_VERSION, ConfigError, configure_logging, get_api_port
from clbc_engine import clbc_run
from code_analysis import compute_stats, decode
from coset_oracle import OracleCapExceeded, min_distance
from gf2_core import BinaryWord, ContractViolation, GF2Matrix
from matrix_io import MatrixParseError, build_document, parse_matrix

app = FastAPI(
    title="Coset Leader Service",
    description="All coset leaders, Matphi and complete decoding for binary linear codes",
    version=TOOL_VERSION,
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


async def read_matrix(file: UploadFile) -> GF2Matrix:
    contents = await file.read()
    try:
        return parse_matrix(contents.decode("utf-8"))
    except UnicodeDecodeError:
        raise HTTPException(status_code=400, detail="Matrix file must be UTF-8 text")
    except MatrixParseError as e:
        raise HTTPException(status_code=400, detail=f"Invalid matrix: {e}")


@app.post("/leaders")
async def leaders(file: UploadFile = File(...), matphi: bool = Form(True)) -> Dict[str, Any]:
    """
    Compute every coset leader of the code whose parity-check matrix is uploaded.
    Returns the same JSON document the command line writes with --json.
    """
    H = await read_matrix(file)
    result = clbc_run(H, compute_matphi=matphi)
    return build_document(result, compute_stats(result), include_matphi=matphi).to_dict()


@app.post("/stats")
async def stats(file: UploadFile = File(...), with_d: bool = Form(False)) -> Dict[str, Any]:
    H = await read_matrix(file)
    result = clbc_run(H, radii_only=True)
    try:
        d = min_distance(H) if with_d else None
    except OracleCapExceeded as e:
        raise HTTPException(status_code=413, detail=str(e))
    except ConfigError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return compute_stats(result, d).to_dict()


@app.post("/decode")
async def decode_word(file: UploadFile = File(...), y: str = Form(...)) -> Dict[str, Any]:
    """All nearest codewords of y; more than one answer means the coset has several leaders."""
    H = await read_matrix(file)
    try:
        received = BinaryWord.from_string(y)
        answers = decode(received, clbc_run(H))
    except ContractViolation as e:
        raise HTTPException(status_code=400, detail=str(e))
    return {
        "received": str(received),
        "answers": [
            {"error": str(a.error), "codeword": str(a.codeword), "distance": a.distance}
            for a in answers
        ],
        "unique": len(answers) == 1,
    }


@app.get("/health")
async def health_check() -> Dict[str, str]:
    """Health check endpoint"""
    return {"status": "healthy", "message": "Coset leader service is running"}


if __name__ == "__main__":
    import uvicorn
    configure_logging()
    uvicorn.run(app, host="0.0.0.0", port=get_api_port())
