import { initApp } from "./app.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("api") ?? "http://localhost:8080";
const root = document.getElementById("app");
if (root) initApp(root, baseUrl);
