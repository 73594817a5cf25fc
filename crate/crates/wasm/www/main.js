import init, { patternRgba, process, spectrumRgba, isotropyScore, compareProfiles } from "./pkg/quarterlap_wasm.js";

const $ = (id) => document.getElementById(id);
const PARAMS = {
  smooth: { name: "c", min: 0.05, max: 1, step: 0.05, value: 1 },
  enhance: { name: "alpha", min: 0.5, max: 20, step: 0.5, value: 10 },
  lowlight: { name: "gamma", min: 0.1, max: 1, step: 0.05, value: 0.5 },
  response: { name: "-", min: 0, max: 1, step: 1, value: 0 },
};

let source = { width: 0, height: 0, data: null };

function draw(canvas, width, height, rgba) {
  canvas.width = width;
  canvas.height = height;
  const ctx = canvas.getContext("2d");
  ctx.putImageData(new ImageData(new Uint8ClampedArray(rgba), width, height), 0, 0);
}

function setSource(width, height, rgba) {
  source = { width, height, data: new Uint8Array(rgba) };
  draw($("input"), width, height, rgba);
  $("row").max = height - 1;
  runFilter();
  runProfile();
}

function loadPattern() {
  const size = 64;
  setSource(size, size, patternRgba($("pattern").value, size));
}

function runFilter() {
  const mode = $("mode").value;
  const iters = Number($("iters").value);
  const param = Number($("param").value);
  $("itersOut").value = iters;
  $("paramOut").value = param;
  try {
    draw($("output"), source.width, source.height, process(source.data, source.width, source.height, mode, iters, param));
  } catch (e) {
    console.error(e);
  }
}

function runProfile() {
  const row = Math.min(Number($("row").value), source.height - 1);
  const iters = Number($("pIters").value);
  $("rowOut").value = row;
  $("pItersOut").value = iters;
  const values = compareProfiles(source.data, source.width, source.height, row, iters);
  const w = source.width;
  const canvas = $("profile");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const line = (offset, color) => {
    ctx.strokeStyle = color;
    ctx.beginPath();
    for (let x = 0; x < w; x++) {
      const px = (x / Math.max(w - 1, 1)) * (canvas.width - 10) + 5;
      const py = canvas.height - 5 - (values[offset + x] / 255) * (canvas.height - 10);
      x === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
    }
    ctx.stroke();
  };
  line(w, "#06c");
  line(0, "#c00");
}

function runSpectrum() {
  const kernel = $("kernel").value;
  draw($("spectrum"), 64, 64, spectrumRgba(kernel, 64));
  $("score").value = isotropyScore(kernel).toFixed(5);
}

function onMode() {
  const p = PARAMS[$("mode").value];
  Object.assign($("param"), { min: p.min, max: p.max, step: p.step, value: p.value });
  $("param").disabled = p.name === "-";
  $("paramName").textContent = p.name;
  runFilter();
}

function onFile(ev) {
  const file = ev.target.files[0];
  if (!file) return;
  const img = new Image();
  img.onload = () => {
    const scale = Math.min(1, 256 / Math.max(img.width, img.height));
    const w = Math.max(1, Math.round(img.width * scale));
    const h = Math.max(1, Math.round(img.height * scale));
    const c = document.createElement("canvas");
    c.width = w;
    c.height = h;
    const ctx = c.getContext("2d");
    ctx.drawImage(img, 0, 0, w, h);
    setSource(w, h, ctx.getImageData(0, 0, w, h).data);
  };
  img.src = URL.createObjectURL(file);
}

await init();
$("pattern").addEventListener("change", loadPattern);
$("file").addEventListener("change", onFile);
$("mode").addEventListener("change", onMode);
$("iters").addEventListener("input", runFilter);
$("param").addEventListener("input", runFilter);
$("row").addEventListener("input", runProfile);
$("pIters").addEventListener("input", runProfile);
$("kernel").addEventListener("change", runSpectrum);
loadPattern();
runSpectrum();
